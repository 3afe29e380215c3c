#pragma once

#include "qc/cosimplicial.hpp"
#include "qc/group.hpp"
#include "qc/yb.hpp"

#include <string>
#include <vector>

namespace qc {

struct ClassificationEntry {
  std::string k_name;
  int action_index = 0;           // index into enumerate_actions(G, K)
  std::vector<int> cocycle;       // phi table
  std::vector<int> r_table;       // SetYB table
  bool nearly_commutative = false;
  bool verified = false;          // full QC suite green
};

struct ClassificationReport {
  std::string group_name;
  int order = 0;
  bool nearly_only = false;
  std::vector<ClassificationEntry> entries;        // all (K, action, phi) triples
  std::vector<std::vector<int>> distinct_r;        // deduped R tables, sorted
  std::vector<std::vector<size_t>> aut_orbits;     // indices into distinct_r, grouped
                                                   // by conjugation under Aut(G)
};

// All quasi-commutative structures on G via (K, action, bijective cocycle)
// triples; K ranges over catalog(|G|). Deterministic and fully verified.
ClassificationReport classify_group(const FiniteGroup& g);

// Restriction to abelian K; every entry additionally satisfies R^2 = I.
ClassificationReport classify_nearly_commutative(const FiniteGroup& g);

// Theorem-main cross checks for one entry: QC suite, rederivation through the
// cocycle complex, and the cocycle round-trip.
VerdictBundle verify_entry(const FiniteGroup& g, const ClassificationEntry& entry);

// Independent witness: every bijection R on G x G satisfying the unit
// constraints, mu R = mu, the two compatibilities and the Yang-Baxter
// equation, by pruned depth-first search. No constructor code shared with
// classify_group. Feasible for |G| <= 4; |G| in {5,6} are long-running.
std::vector<std::vector<int>> brute_force_qc_tables(const FiniteGroup& g);

}  // namespace qc
