#pragma once

#include "qc/algebra.hpp"
#include "qc/error.hpp"
#include "qc/group.hpp"
#include "qc/matrix.hpp"

#include <optional>
#include <vector>

namespace qc {

// Set-level Yang-Baxter operator: a bijection of pairs, encoded (i,j) -> i*n+j.
struct SetYB {
  int n = 0;
  std::vector<int> table;  // table[i*n+j] = i'*n+j'

  int apply(int p) const { return table[static_cast<size_t>(p)]; }
  std::pair<int, int> apply(int i, int j) const {
    int p = table[static_cast<size_t>(i) * n + j];
    return {p / n, p % n};
  }
  int a(int i, int j) const { return apply(i, j).first; }
  int b(int i, int j) const { return apply(i, j).second; }
  bool is_bijection() const;
  SetYB inverse() const;
};

SetYB swap_yb(int n);
SetYB identity_yb(int n);

// Linear Yang-Baxter operator on A (x) A for dim-d A.
struct LinYB {
  int d = 0;
  Mat m;  // d^2 x d^2

  LinYB inverse() const { return {d, mat_invert(m)}; }
};

struct BraidWord {
  int strands = 0;
  std::vector<int> letters;  // +-1..+-(strands-1); first letter applied first
};

std::vector<int> braid_permutation(const BraidWord& w);  // underlying permutation

// Full axiom report for a candidate quasi-commutative structure.
struct QCSuiteReport {
  Verdict bijective;   // R is invertible
  Verdict ybe;         // (R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R)
  Verdict ide_left;    // R(iota (x) I) = I (x) iota
  Verdict ide_right;   // R(I (x) iota) = iota (x) I
  Verdict mur;         // R(I (x) mu) = (mu (x) I)(I (x) R)(R (x) I)
  Verdict mul;         // R(mu (x) I) = (I (x) mu)(R (x) I)(I (x) R)
  Verdict com;         // mu R = mu
  bool braided_ok() const { return bijective.ok && ybe.ok && ide_left.ok && ide_right.ok && mur.ok && mul.ok; }
  bool qc_ok() const { return braided_ok() && com.ok; }
  VerdictBundle bundle() const;
};

Verdict check_ybe(const SetYB& r);
Verdict check_ybe(const LinYB& r);
VerdictBundle check_braided(const FiniteMonoid& m, const SetYB& r);
VerdictBundle check_braided(const AlgebraSC& a, const LinYB& r);
Verdict check_quasi_commutative(const FiniteMonoid& m, const SetYB& r);
Verdict check_quasi_commutative(const AlgebraSC& a, const LinYB& r);
bool check_nearly_commutative(const SetYB& r);
bool check_nearly_commutative(const LinYB& r);

QCSuiteReport qc_suite(const FiniteMonoid& m, const SetYB& r);
QCSuiteReport qc_suite(const AlgebraSC& a, const LinYB& r);

// R(x,y) = (y, y^-1 x y); asserts the full QC suite.
SetYB yb_from_group(const FiniteGroup& g);

// R(f,g) = (f g psi^-1, psi), psi = phi^-1(phi(f)^g); requires phi bijective.
SetYB yb_from_cocycle(const OneCocycle& phi);

// Builds R(f,g) = (alpha(f,g), beta(f,g)) and reports which axioms hold.
struct MatchedPairReport {
  SetYB r;
  QCSuiteReport suite;
};
MatchedPairReport yb_from_matched_pair(const FiniteGroup& g, const std::vector<int>& alpha,
                                       const std::vector<int>& beta);

// R(e_s (x) e_t) = alpha(s,t)/alpha(t, t^-1 s t) e_t (x) e_{t^-1 s t} on k[S,alpha].
LinYB yb_from_skew_group(const TwoCocycleQ& alpha);

// R(g (x) h) = sum h_(2) (x) S^-1(h_(1)) g h_(0); requires check_hopf to pass.
LinYB yb_from_hopf(const HopfSC& h);

// tau(a (x) h) = psi(a)(1 (x) S(h)) together with its defining identities.
struct GaloisTauReport {
  Mat tau;
  Verdict eq_d0;      // tau d0 = d1
  Verdict eq_d1;      // tau d1 = d0
  Verdict eq_sigma;   // sigma tau = sigma
  bool tau_squared_identity = false;
  bool hopf_commutative = false;
};
GaloisTauReport galois_tau(const ComoduleAlgebra& c);

// Composite of I..R..I factors per braid letter; negative letters use R^-1.
// Returns an endomap table on n^strands points (set) or a matrix (linear).
std::vector<int> braid_action(const SetYB& r, const BraidWord& word);
Mat braid_action(const LinYB& r, const BraidWord& word);

// Recovers (K, action, phi) from a QC structure per the group-with-product
// x*y = x a(x^-1, y) construction; round-trips through yb_from_cocycle.
struct CocycleData {
  FiniteGroup k;
  RightAction action;
  OneCocycle cocycle;
};
CocycleData cocycle_from_yb(const FiniteGroup& g, const SetYB& r);

// Permutation matrix of a set-level operator under the i*n+j convention.
LinYB linearize(const SetYB& r);

}  // namespace qc
