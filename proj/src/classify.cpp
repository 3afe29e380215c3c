#include "qc/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qc {

namespace {

ClassificationReport classify_impl(const FiniteGroup& g, bool nearly_only) {
  if (g.n < 1 || g.n > 12) throw Error("OrderOutOfRange", "classification covers orders 1..12");
  ClassificationReport rep;
  rep.group_name = g.name;
  rep.order = g.n;
  rep.nearly_only = nearly_only;
  for (const FiniteGroup& k : catalog(g.n)) {
    if (nearly_only && !k.is_abelian()) continue;
    auto actions = enumerate_actions(g, k);
    for (size_t ai = 0; ai < actions.size(); ++ai) {
      for (const OneCocycle& phi : enumerate_bijective_cocycles(actions[ai])) {
        SetYB r = yb_from_cocycle(phi);  // throws unless the QC suite passes
        ClassificationEntry e;
        e.k_name = k.name;
        e.action_index = static_cast<int>(ai);
        e.cocycle = phi.table;
        e.r_table = r.table;
        e.nearly_commutative = check_nearly_commutative(r);
        e.verified = true;
        if (nearly_only && !e.nearly_commutative)
          throw Error("QCChecksFailed", "abelian K produced a non-involutive operator");
        rep.entries.push_back(std::move(e));
      }
    }
  }
  std::set<std::vector<int>> distinct;
  for (const auto& e : rep.entries) distinct.insert(e.r_table);
  rep.distinct_r.assign(distinct.begin(), distinct.end());

  // secondary view: orbits of the deduped tables under Aut(G) conjugation
  auto auts = automorphism_group(g);
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < rep.distinct_r.size(); ++i) index[rep.distinct_r[i]] = i;
  std::vector<bool> used(rep.distinct_r.size(), false);
  for (size_t i = 0; i < rep.distinct_r.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> orbit;
    for (const auto& theta : auts) {
      std::vector<int> conj(rep.distinct_r[i].size());
      std::vector<int> theta_inv(theta.size());
      for (size_t x = 0; x < theta.size(); ++x) theta_inv[static_cast<size_t>(theta[x])] = static_cast<int>(x);
      const int n = g.n;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          // (theta (x) theta) R (theta^-1 (x) theta^-1)
          int xi = theta_inv[static_cast<size_t>(x)], yi = theta_inv[static_cast<size_t>(y)];
          int p = rep.distinct_r[i][static_cast<size_t>(xi) * n + yi];
          conj[static_cast<size_t>(x) * n + y] =
              theta[static_cast<size_t>(p / n)] * n + theta[static_cast<size_t>(p % n)];
        }
      auto it = index.find(conj);
      if (it != index.end() && !used[it->second]) {
        used[it->second] = true;
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    rep.aut_orbits.push_back(std::move(orbit));
  }
  return rep;
}

}  // namespace

ClassificationReport classify_group(const FiniteGroup& g) { return classify_impl(g, false); }

ClassificationReport classify_nearly_commutative(const FiniteGroup& g) {
  return classify_impl(g, true);
}

VerdictBundle verify_entry(const FiniteGroup& g, const ClassificationEntry& entry) {
  VerdictBundle out;
  SetYB r{g.n, entry.r_table};
  auto suite = qc_suite(g, r);
  out.add(suite.bundle());
  // rebuild through the cosimplicial route
  FiniteGroup k = catalog_by_name(entry.k_name);
  auto actions = enumerate_actions(g, k);
  if (entry.action_index < 0 || entry.action_index >= static_cast<int>(actions.size())) {
    out.add(Verdict::fail("action_index", "action index out of range"));
    return out;
  }
  OneCocycle phi = check_one_cocycle(entry.cocycle, actions[static_cast<size_t>(entry.action_index)]);
  CocycleComplex cx = cosimp_from_cocycle(phi);
  out.add(check_identities(cx), "complex");
  SetYB derived = derive_yb_set(cx);
  out.add(derived.table == entry.r_table
              ? Verdict::pass("derive_matches")
              : Verdict::fail("derive_matches", "cosimplicial derivation differs from R"));
  // cocycle round-trip
  try {
    CocycleData data = cocycle_from_yb(g, r);
    SetYB again = yb_from_cocycle(data.cocycle);
    out.add(again.table == entry.r_table
                ? Verdict::pass("cocycle_roundtrip")
                : Verdict::fail("cocycle_roundtrip", "recovered cocycle gives a different R"));
  } catch (const Error& e) {
    out.add(Verdict::fail("cocycle_roundtrip", e.what()));
  }
  return out;
}

}  // namespace qc
