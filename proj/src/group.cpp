#include "qc/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qc {

namespace {

std::string idx3(int x, int y, int z) {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

}  // namespace

bool FiniteMonoid::is_commutative() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

int FiniteGroup::order_of(int a) const {
  int x = a, ord = 1;
  while (x != identity) {
    x = op(x, a);
    ++ord;
  }
  return ord;
}

std::string MonoidIssue::describe() const {
  std::ostringstream os;
  switch (kind) {
    case BadShape: os << "table is not square"; break;
    case BadEntry: os << "entry out of range at " << idx3(x, y, -1); break;
    case NotUnit: os << "identity fails at element " << x; break;
    case NotAssociative: os << "associativity fails at " << idx3(x, y, z); break;
    case NoInverse: os << "element " << x << " has no two-sided inverse"; break;
  }
  return os.str();
}

std::vector<MonoidIssue> monoid_violations(const std::vector<int>& table, int identity) {
  std::vector<MonoidIssue> out;
  const auto sz = table.size();
  int n = 0;
  while (static_cast<size_t>(n) * n < sz) ++n;
  if (static_cast<size_t>(n) * n != sz || n == 0) {
    out.push_back({MonoidIssue::BadShape});
    return out;
  }
  auto op = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (op(a, b) < 0 || op(a, b) >= n) {
        out.push_back({MonoidIssue::BadEntry, a, b});
        return out;  // later checks would index out of range
      }
  if (identity < 0 || identity >= n) {
    out.push_back({MonoidIssue::NotUnit, identity});
    return out;
  }
  for (int a = 0; a < n; ++a)
    if (op(identity, a) != a || op(a, identity) != a)
      out.push_back({MonoidIssue::NotUnit, a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          out.push_back({MonoidIssue::NotAssociative, a, b, c});
  return out;
}

FiniteMonoid validate_monoid(const std::vector<int>& table, int identity,
                             const std::string& name) {
  auto issues = monoid_violations(table, identity);
  if (!issues.empty()) {
    const char* kind = issues.front().kind == MonoidIssue::NotAssociative
                           ? "NotAssociative"
                           : (issues.front().kind == MonoidIssue::NotUnit ? "NotUnit" : "BadTable");
    throw Error(kind, issues.front().describe());
  }
  FiniteMonoid m;
  m.name = name;
  int n = 0;
  while (static_cast<size_t>(n) * n < table.size()) ++n;
  m.n = n;
  m.table = table;
  m.identity = identity;
  return m;
}

FiniteGroup validate_group(const std::vector<int>& table, int identity, const std::string& name) {
  FiniteMonoid m = validate_monoid(table, identity, name);
  FiniteGroup g;
  static_cast<FiniteMonoid&>(g) = m;
  g.inv.assign(static_cast<size_t>(g.n), -1);
  for (int a = 0; a < g.n; ++a) {
    int found = -1;
    for (int b = 0; b < g.n; ++b)
      if (g.op(a, b) == identity && g.op(b, a) == identity) {
        found = b;
        break;
      }
    if (found < 0)
      throw Error("NoInverse", MonoidIssue{MonoidIssue::NoInverse, a}.describe());
    g.inv[static_cast<size_t>(a)] = found;
  }
  return g;
}

std::optional<FiniteGroup> try_group(const FiniteMonoid& m) {
  try {
    return validate_group(m.table, m.identity, m.name);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<MonoidIssue> action_violations(const RightAction& a) {
  std::vector<MonoidIssue> out;
  const int nk = a.carrier.n, ng = a.actor.n;
  for (int k = 0; k < nk; ++k)
    if (a.apply(k, a.actor.identity) != k) out.push_back({MonoidIssue::NotUnit, k});
  for (int k = 0; k < nk; ++k)
    for (int f = 0; f < ng; ++f)
      for (int g = 0; g < ng; ++g)
        if (a.apply(a.apply(k, f), g) != a.apply(k, a.actor.op(f, g)))
          out.push_back({MonoidIssue::NotAssociative, k, f, g});
  for (int g = 0; g < ng; ++g) {
    std::vector<bool> seen(static_cast<size_t>(nk), false);
    for (int k = 0; k < nk; ++k) seen[static_cast<size_t>(a.apply(k, g))] = true;
    bool bijective = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    bool hom = true;
    for (int u = 0; u < nk && hom; ++u)
      for (int v = 0; v < nk && hom; ++v)
        hom = a.apply(a.carrier.op(u, v), g) == a.carrier.op(a.apply(u, g), a.apply(v, g));
    if (!bijective || !hom) out.push_back({MonoidIssue::NoInverse, g});
  }
  return out;
}

RightAction validate_action(FiniteGroup g, FiniteGroup k, std::vector<int> act) {
  RightAction a{std::move(g), std::move(k), std::move(act)};
  if (a.act.size() != static_cast<size_t>(a.carrier.n) * a.actor.n)
    throw Error("InvalidAction", "action table has wrong size");
  auto issues = action_violations(a);
  if (!issues.empty()) throw Error("InvalidAction", issues.front().describe());
  return a;
}

RightAction trivial_action(const FiniteGroup& g, const FiniteGroup& k) {
  RightAction a{g, k, {}};
  a.act.resize(static_cast<size_t>(k.n) * g.n);
  for (int u = 0; u < k.n; ++u)
    for (int x = 0; x < g.n; ++x) a.act[static_cast<size_t>(u) * g.n + x] = u;
  return a;
}

std::vector<int> OneCocycle::phi_inverse() const {
  std::vector<int> inv(table.size(), -1);
  for (size_t g = 0; g < table.size(); ++g) inv[static_cast<size_t>(table[g])] = static_cast<int>(g);
  return inv;
}

OneCocycle check_one_cocycle(const std::vector<int>& phi, const RightAction& act) {
  const int ng = act.actor.n, nk = act.carrier.n;
  if (phi.size() != static_cast<size_t>(ng))
    throw Error("CocycleViolation", "table must be total on G");
  for (int v : phi)
    if (v < 0 || v >= nk) throw Error("CocycleViolation", "value out of range");
  for (int f = 0; f < ng; ++f)
    for (int g = 0; g < ng; ++g) {
      int lhs = phi[static_cast<size_t>(act.actor.op(f, g))];
      int rhs = act.carrier.op(act.apply(phi[static_cast<size_t>(f)], g), phi[static_cast<size_t>(g)]);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "phi(fg) != phi(f)^g phi(g) at (f,g)=(" << f << "," << g << ")";
        throw Error("CocycleViolation", os.str());
      }
    }
  OneCocycle c{act, phi, false};
  std::vector<bool> seen(static_cast<size_t>(nk), false);
  for (int v : phi) seen[static_cast<size_t>(v)] = true;
  c.bijective = ng == nk && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  return c;
}

TwoCocycleQ check_two_cocycle(const std::vector<Rat>& alpha, const FiniteGroup& s) {
  const int n = s.n;
  if (alpha.size() != static_cast<size_t>(n) * n)
    throw Error("CocycleViolation", "alpha table has wrong size");
  for (const Rat& v : alpha)
    if (v.is_zero()) throw Error("CocycleViolation", "alpha takes the value 0");
  const Rat c = alpha[static_cast<size_t>(s.identity) * n + s.identity];
  std::vector<Rat> norm(alpha);
  for (Rat& v : norm) v /= c;
  auto at = [&](int a, int b) -> const Rat& { return norm[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    if (!at(s.identity, a).is_one() || !at(a, s.identity).is_one())
      throw Error("CocycleViolation",
                  "alpha is not normalisable: alpha(e,-) or alpha(-,e) non-constant");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(x, y) * at(s.op(x, y), z) != at(y, z) * at(x, s.op(y, z)))
          throw Error("CocycleViolation", "cocycle law fails at " + idx3(x, y, z));
  return TwoCocycleQ{s, std::move(norm)};
}

TwoCocycleQ constant_two_cocycle(const FiniteGroup& s) {
  std::vector<Rat> a(static_cast<size_t>(s.n) * s.n, Rat(1));
  return TwoCocycleQ{s, std::move(a)};
}

TwoCocycleQ quaternion_cocycle() {
  // Klein four-group {e,a,b,c} as {1,i,j,k} mod sign.
  FiniteGroup v = catalog_by_name("Z/2xZ/2");
  // i*i = -1, i*j = k, j*i = -k, ... : multiply quaternion units and record signs.
  // Elements: 0=e->1, 1=a->i, 2=b->j, 3=c->k (with a=(1,0), b=(0,1), c=(1,1) in v).
  auto unit_mul = [](int x, int y, int& sign) -> int {
    // quaternion unit table over {1,i,j,k}; sign out-parameter
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[x][y];
    return prod[x][y];
  };
  std::vector<Rat> alpha(16, Rat(1));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int sign = 1;
      unit_mul(x, y, sign);
      alpha[static_cast<size_t>(x) * 4 + y] = Rat(sign);
    }
  return check_two_cocycle(alpha, v);
}

const Rat& CentralExtension::chi_of(int a_element) const {
  auto it = std::lower_bound(center_sub.begin(), center_sub.end(), a_element);
  if (it == center_sub.end() || *it != a_element)
    throw Error("NonCentral", "element not in the central subgroup");
  return chi[static_cast<size_t>(it - center_sub.begin())];
}

CentralExtension validate_central_extension(FiniteGroup g, std::vector<int> a,
                                            std::vector<Rat> chi) {
  std::sort(a.begin(), a.end());
  if (chi.size() != a.size()) throw Error("NonCentral", "chi must be indexed by A");
  // subgroup?
  std::set<int> in(a.begin(), a.end());
  if (!in.count(g.identity)) throw Error("NonCentral", "A must contain the identity");
  for (int x : a) {
    if (x < 0 || x >= g.n) throw Error("NonCentral", "A element out of range");
    if (!in.count(g.invert(x))) throw Error("NonCentral", "A not closed under inverse");
    for (int y : a)
      if (!in.count(g.op(x, y))) throw Error("NonCentral", "A not closed under product");
  }
  // central?
  for (int x : a)
    for (int y = 0; y < g.n; ++y)
      if (g.op(x, y) != g.op(y, x)) throw Error("NonCentral", "A is not central in G");
  // chi multiplicative?
  CentralExtension ext{std::move(g), std::move(a), std::move(chi)};
  for (int x : ext.center_sub) {
    if (ext.chi_of(x).is_zero()) throw Error("NonCentral", "chi takes the value 0");
    for (int y : ext.center_sub)
      if (ext.chi_of(ext.total.op(x, y)) != ext.chi_of(x) * ext.chi_of(y))
        throw Error("NonCentral", "chi is not multiplicative");
  }
  return ext;
}

FiniteGroup semidirect_product(const FiniteGroup& g, const RightAction& act) {
  if (!action_violations(act).empty())
    throw Error("InvalidAction", action_violations(act).front().describe());
  if (act.actor.table != g.table) throw Error("InvalidAction", "action actor differs from G");
  const FiniteGroup& k = act.carrier;
  const int nk = k.n, ng = g.n;
  std::vector<int> table(static_cast<size_t>(ng) * nk * ng * nk);
  auto enc = [&](int f, int u) { return f * nk + u; };
  for (int f = 0; f < ng; ++f)
    for (int u = 0; u < nk; ++u)
      for (int h = 0; h < ng; ++h)
        for (int v = 0; v < nk; ++v)
          table[static_cast<size_t>(enc(f, u)) * ng * nk + enc(h, v)] =
              enc(g.op(f, h), k.op(act.apply(u, h), v));
  std::string name = g.name + "><" + k.name;
  return validate_group(table, 0, name);
}

std::vector<int> generated_subgroup(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> have{g.identity};
  std::vector<int> queue{g.identity};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : gens) {
      int y = g.op(x, s);
      if (have.insert(y).second) queue.push_back(y);
    }
  }
  return {have.begin(), have.end()};
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> have = generated_subgroup(g, gens);
  while (static_cast<int>(have.size()) < g.n) {
    for (int x = 0; x < g.n; ++x)
      if (!std::binary_search(have.begin(), have.end(), x)) {
        gens.push_back(x);
        break;
      }
    have = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<OneCocycle> enumerate_bijective_cocycles(const RightAction& act) {
  const FiniteGroup& g = act.actor;
  const FiniteGroup& k = act.carrier;
  if (g.n != k.n) throw Error("SizeMismatch", "bijective cocycles need |G| = |K|");
  std::vector<int> gens = generating_sequence(g);
  std::vector<OneCocycle> out;
  if (gens.empty()) {
    // trivial group
    out.push_back(check_one_cocycle({k.identity}, act));
    return out;
  }

  // BFS order over G via right multiplication by generators; each element gets
  // a defining word (parent, generator). phi extends by phi(xg) = phi(x)^g phi(g).
  std::vector<int> parent(static_cast<size_t>(g.n), -1), via(static_cast<size_t>(g.n), -1),
      order;
  {
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    std::vector<int> queue{g.identity};
    seen[static_cast<size_t>(g.identity)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.erase(queue.begin());
      order.push_back(x);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = g.op(x, gens[gi]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          parent[static_cast<size_t>(y)] = x;
          via[static_cast<size_t>(y)] = static_cast<int>(gi);
          queue.push_back(y);
        }
      }
    }
  }

  std::vector<int> images(gens.size(), 0);
  std::vector<std::vector<int>> found;
  // lexicographic DFS over generator images
  const int nk = k.n;
  std::vector<int> phi(static_cast<size_t>(g.n), -1);
  auto attempt = [&]() {
    phi.assign(static_cast<size_t>(g.n), -1);
    phi[static_cast<size_t>(g.identity)] = k.identity;
    for (int x : order) {
      if (x == g.identity) continue;
      int p = parent[static_cast<size_t>(x)];
      int gen = gens[static_cast<size_t>(via[static_cast<size_t>(x)])];
      int img = images[static_cast<size_t>(via[static_cast<size_t>(x)])];
      phi[static_cast<size_t>(x)] = k.op(act.apply(phi[static_cast<size_t>(p)], gen), img);
    }
    // full law + bijectivity check
    std::vector<bool> seen(static_cast<size_t>(nk), false);
    for (int v : phi) {
      if (seen[static_cast<size_t>(v)]) return;
      seen[static_cast<size_t>(v)] = true;
    }
    for (int f = 0; f < g.n; ++f)
      for (int h = 0; h < g.n; ++h)
        if (phi[static_cast<size_t>(g.op(f, h))] !=
            k.op(act.apply(phi[static_cast<size_t>(f)], h), phi[static_cast<size_t>(h)]))
          return;
    found.push_back(phi);
  };
  size_t total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= static_cast<size_t>(nk);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < gens.size(); ++i) {
      images[i] = static_cast<int>(c % static_cast<size_t>(nk));
      c /= static_cast<size_t>(nk);
    }
    attempt();
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& f : found) out.push_back(check_one_cocycle(f, act));
  return out;
}

std::vector<std::vector<int>> automorphism_group(const FiniteGroup& k) {
  std::vector<int> gens = generating_sequence(k);
  std::vector<std::vector<int>> out;
  if (gens.empty()) {
    out.push_back({0});
    return out;
  }
  // words: every element as (parent, generator index) over left BFS
  std::vector<int> parent(static_cast<size_t>(k.n), -1), via(static_cast<size_t>(k.n), -1), order;
  {
    std::vector<bool> seen(static_cast<size_t>(k.n), false);
    std::vector<int> queue{k.identity};
    seen[static_cast<size_t>(k.identity)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.erase(queue.begin());
      order.push_back(x);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = k.op(x, gens[gi]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          parent[static_cast<size_t>(y)] = x;
          via[static_cast<size_t>(y)] = static_cast<int>(gi);
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<int> images(gens.size());
  std::vector<int> f(static_cast<size_t>(k.n));
  size_t total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= static_cast<size_t>(k.n);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    bool ok = true;
    for (size_t i = 0; i < gens.size(); ++i) {
      images[i] = static_cast<int>(c % static_cast<size_t>(k.n));
      c /= static_cast<size_t>(k.n);
      if (k.order_of(images[i]) != k.order_of(gens[i])) ok = false;  // prune
    }
    if (!ok) continue;
    f.assign(static_cast<size_t>(k.n), -1);
    f[static_cast<size_t>(k.identity)] = k.identity;
    for (int x : order) {
      if (x == k.identity) continue;
      int p = parent[static_cast<size_t>(x)];
      f[static_cast<size_t>(x)] =
          k.op(f[static_cast<size_t>(p)], images[static_cast<size_t>(via[static_cast<size_t>(x)])]);
    }
    std::vector<bool> seen(static_cast<size_t>(k.n), false);
    for (int v : f) {
      if (v < 0 || seen[static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
      seen[static_cast<size_t>(v)] = true;
    }
    if (!ok) continue;
    for (int a = 0; a < k.n && ok; ++a)
      for (int b = 0; b < k.n && ok; ++b)
        ok = f[static_cast<size_t>(k.op(a, b))] ==
             k.op(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]);
    if (ok) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RightAction> enumerate_actions(const FiniteGroup& g, const FiniteGroup& k) {
  std::vector<std::vector<int>> aut = automorphism_group(k);
  const int na = static_cast<int>(aut.size());
  auto compose = [&](int i, int j) {  // aut[i] after aut[j]
    std::vector<int> c(static_cast<size_t>(k.n));
    for (int x = 0; x < k.n; ++x)
      c[static_cast<size_t>(x)] = aut[static_cast<size_t>(i)][static_cast<size_t>(
          aut[static_cast<size_t>(j)][static_cast<size_t>(x)])];
    return c;
  };
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < na; ++i) index[aut[static_cast<size_t>(i)]] = i;
  // rho : G -> Aut(K) with rho(fg) = rho(g) o rho(f)
  std::vector<int> gens = generating_sequence(g);
  std::vector<std::vector<int>> homs;
  std::vector<int> rho(static_cast<size_t>(g.n), -1);
  std::vector<int> parent(static_cast<size_t>(g.n), -1), via(static_cast<size_t>(g.n), -1), order;
  {
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    std::vector<int> queue{g.identity};
    seen[static_cast<size_t>(g.identity)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.erase(queue.begin());
      order.push_back(x);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = g.op(x, gens[gi]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          parent[static_cast<size_t>(y)] = x;
          via[static_cast<size_t>(y)] = static_cast<int>(gi);
          queue.push_back(y);
        }
      }
    }
  }
  const int id_aut = index.at([&] {
    std::vector<int> idp(static_cast<size_t>(k.n));
    std::iota(idp.begin(), idp.end(), 0);
    return idp;
  }());
  std::vector<int> images(gens.size(), 0);
  size_t total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= static_cast<size_t>(na);
  if (gens.empty()) total = 1;
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < gens.size(); ++i) {
      images[i] = static_cast<int>(c % static_cast<size_t>(na));
      c /= static_cast<size_t>(na);
    }
    rho.assign(static_cast<size_t>(g.n), -1);
    rho[static_cast<size_t>(g.identity)] = id_aut;
    bool ok = true;
    for (int x : order) {
      if (x == g.identity) continue;
      int p = parent[static_cast<size_t>(x)];
      int gi = via[static_cast<size_t>(x)];
      // rho(p * gen) = rho(gen) o rho(p)
      auto comp = compose(images[static_cast<size_t>(gi)], rho[static_cast<size_t>(p)]);
      auto it = index.find(comp);
      if (it == index.end()) {
        ok = false;
        break;
      }
      rho[static_cast<size_t>(x)] = it->second;
    }
    if (!ok) continue;
    for (int f = 0; f < g.n && ok; ++f)
      for (int h = 0; h < g.n && ok; ++h) {
        auto comp = compose(rho[static_cast<size_t>(h)], rho[static_cast<size_t>(f)]);
        ok = comp == aut[static_cast<size_t>(rho[static_cast<size_t>(g.op(f, h))])];
      }
    if (!ok) continue;
    homs.push_back(rho);
  }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
  // trivial action first
  std::vector<int> trivial(static_cast<size_t>(g.n), id_aut);
  auto it = std::find(homs.begin(), homs.end(), trivial);
  if (it != homs.end() && it != homs.begin()) std::rotate(homs.begin(), it, it + 1);

  std::vector<RightAction> out;
  for (const auto& h : homs) {
    RightAction a{g, k, {}};
    a.act.resize(static_cast<size_t>(k.n) * g.n);
    for (int u = 0; u < k.n; ++u)
      for (int x = 0; x < g.n; ++x)
        a.act[static_cast<size_t>(u) * g.n + x] =
            aut[static_cast<size_t>(h[static_cast<size_t>(x)])][static_cast<size_t>(u)];
    out.push_back(std::move(a));
  }
  return out;
}

bool near_commutative_extension_test(const CentralExtension& ext) {
  const FiniteGroup& g = ext.total;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int comm = g.op(g.op(x, y), g.op(g.invert(x), g.invert(y)));
      if (!std::binary_search(ext.center_sub.begin(), ext.center_sub.end(), comm)) return false;
    }
  return true;
}

FiniteGroup cyclic_group(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  std::ostringstream name;
  name << "Z/" << n;
  return validate_group(t, 0, name.str());
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.n * b.n;
  std::vector<int> t(static_cast<size_t>(n) * n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[static_cast<size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.op(x1, x2), b.op(y1, y2));
  return validate_group(t, 0, a.name + "x" + b.name);
}

FiniteGroup dihedral_group(int n) {
  // elements r^i s^j, encoded i + n*j (j in {0,1}); s r = r^-1 s
  const int sz = 2 * n;
  auto enc = [&](int i, int j) { return i + n * j; };
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[static_cast<size_t>(enc(i1, j1)) * sz + enc(i2, j2)] = enc(i, j);
        }
  std::ostringstream name;
  name << "D" << n;
  return validate_group(t, 0, name.str());
}

FiniteGroup quaternion_group() {
  // {1,-1,i,-i,j,-j,k,-k} as (unit, sign): enc = unit*2 + (sign<0)
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto enc = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
  std::vector<int> t(64);
  for (int u1 = 0; u1 < 4; ++u1)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int u2 = 0; u2 < 4; ++u2)
        for (int s2 = 0; s2 < 2; ++s2) {
          int u = prod[u1][u2];
          int s = sgn[u1][u2] * (s1 ? -1 : 1) * (s2 ? -1 : 1);
          t[static_cast<size_t>(enc(u1, s1 ? -1 : 1)) * 8 + enc(u2, s2 ? -1 : 1)] = enc(u, s);
        }
  return validate_group(t, 0, "Q8");
}

FiniteGroup alternating_group_4() {
  // even permutations of {0,1,2,3}, sorted so the identity comes first
  std::vector<std::array<int, 4>> elems;
  std::vector<int> idx{0, 1, 2, 3};
  do {
    std::array<int, 4> q{idx[0], idx[1], idx[2], idx[3]};
    int invs = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[static_cast<size_t>(i)] > q[static_cast<size_t>(j)]) ++invs;
    if (invs % 2 == 0) elems.push_back(q);
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::sort(elems.begin(), elems.end());
  const int n = static_cast<int>(elems.size());
  auto find = [&](const std::array<int, 4>& q) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 4> c;
      for (int i = 0; i < 4; ++i)
        c[static_cast<size_t>(i)] =
            elems[static_cast<size_t>(a)][static_cast<size_t>(elems[static_cast<size_t>(b)][static_cast<size_t>(i)])];
      t[static_cast<size_t>(a) * n + b] = find(c);
    }
  return validate_group(t, 0, "A4");
}

FiniteGroup dicyclic_group_3() {
  // <a,b | a^6 = e, b^2 = a^3, b a b^-1 = a^-1>, elements a^i b^j, i<6, j<2
  auto enc = [](int i, int j) { return i + 6 * j; };
  std::vector<int> t(144);
  for (int i1 = 0; i1 < 6; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 6; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (a^i1 b^j1)(a^i2 b^j2): move b^j1 past a^i2: b a^k = a^-k b
          int i = j1 == 0 ? (i1 + i2) % 6 : ((i1 - i2) % 6 + 6) % 6;
          int j = j1 + j2;
          if (j == 2) {  // b^2 = a^3
            i = (i + 3) % 6;
            j = 0;
          }
          t[static_cast<size_t>(enc(i1, j1)) * 12 + enc(i2, j2)] = enc(i, j);
        }
  return validate_group(t, 0, "Dic3");
}

FiniteMonoid and_monoid() {
  // {1,0}: index 0 is the unit 1, index 1 absorbs
  return validate_monoid({0, 1, 1, 1}, 0, "AND");
}

std::vector<FiniteGroup> catalog(int order) {
  if (order < 1 || order > 12) throw Error("OrderOutOfRange", "catalog covers orders 1..12");
  std::vector<FiniteGroup> out;
  auto z = [&](int n) { return cyclic_group(n); };
  switch (order) {
    case 1: out = {z(1)}; break;
    case 2: out = {z(2)}; break;
    case 3: out = {z(3)}; break;
    case 4: {
      auto v = direct_product(z(2), z(2));
      v.name = "Z/2xZ/2";
      out = {z(4), v};
      break;
    }
    case 5: out = {z(5)}; break;
    case 6: {
      auto s3 = dihedral_group(3);
      s3.name = "S3";
      out = {z(6), s3};
      break;
    }
    case 7: out = {z(7)}; break;
    case 8: {
      auto z42 = direct_product(z(4), z(2));
      z42.name = "Z/4xZ/2";
      auto z222 = direct_product(direct_product(z(2), z(2)), z(2));
      z222.name = "Z/2xZ/2xZ/2";
      out = {z(8), z42, z222, dihedral_group(4), quaternion_group()};
      break;
    }
    case 9: {
      auto z33 = direct_product(z(3), z(3));
      z33.name = "Z/3xZ/3";
      out = {z(9), z33};
      break;
    }
    case 10: out = {z(10), dihedral_group(5)}; break;
    case 11: out = {z(11)}; break;
    case 12: {
      auto z26 = direct_product(z(2), z(6));
      z26.name = "Z/2xZ/6";
      out = {z(12), z26, alternating_group_4(), dihedral_group(6), dicyclic_group_3()};
      break;
    }
  }
  return out;
}

FiniteGroup catalog_by_name(const std::string& name) {
  for (int order = 1; order <= 12; ++order)
    for (auto& g : catalog(order))
      if (g.name == name) return g;
  throw Error("OrderOutOfRange", "no catalog group named '" + name + "'");
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n != b.n) return false;
  std::vector<int> prof_a(static_cast<size_t>(a.n) + 1, 0), prof_b(prof_a);
  for (int x = 0; x < a.n; ++x) ++prof_a[static_cast<size_t>(a.order_of(x))];
  for (int x = 0; x < b.n; ++x) ++prof_b[static_cast<size_t>(b.order_of(x))];
  if (prof_a != prof_b) return false;
  std::vector<int> gens = generating_sequence(a);
  if (gens.empty()) return true;
  // all candidate image tuples with matching element orders
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < b.n; ++y)
      if (b.order_of(y) == a.order_of(gens[i])) cands[i].push_back(y);
  std::vector<int> parent(static_cast<size_t>(a.n), -1), via(static_cast<size_t>(a.n), -1), order;
  {
    std::vector<bool> seen(static_cast<size_t>(a.n), false);
    std::vector<int> queue{a.identity};
    seen[static_cast<size_t>(a.identity)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.erase(queue.begin());
      order.push_back(x);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = a.op(x, gens[gi]);
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          parent[static_cast<size_t>(y)] = x;
          via[static_cast<size_t>(y)] = static_cast<int>(gi);
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<size_t> pick(gens.size(), 0);
  std::vector<int> f(static_cast<size_t>(a.n));
  while (true) {
    f.assign(static_cast<size_t>(a.n), -1);
    f[static_cast<size_t>(a.identity)] = b.identity;
    for (int x : order) {
      if (x == a.identity) continue;
      int p = parent[static_cast<size_t>(x)];
      int gi = via[static_cast<size_t>(x)];
      f[static_cast<size_t>(x)] =
          b.op(f[static_cast<size_t>(p)], cands[static_cast<size_t>(gi)][pick[static_cast<size_t>(gi)]]);
    }
    bool ok = true;
    std::vector<bool> seen(static_cast<size_t>(b.n), false);
    for (int v : f) {
      if (seen[static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
      seen[static_cast<size_t>(v)] = true;
    }
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y)
        ok = f[static_cast<size_t>(a.op(x, y))] ==
             b.op(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
    if (ok) return true;
    // advance
    size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < cands[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) return false;
  }
}

std::vector<FiniteMonoid> enumerate_monoids(int order) {
  std::vector<FiniteMonoid> out;
  const int n = order;
  const int cells = (n - 1) * (n - 1);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    table[static_cast<size_t>(0) * n + a] = a;
    table[static_cast<size_t>(a) * n + 0] = a;
  }
  size_t total = 1;
  for (int i = 0; i < cells; ++i) total *= static_cast<size_t>(n);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        table[static_cast<size_t>(a) * n + b] = static_cast<int>(c % static_cast<size_t>(n));
        c /= static_cast<size_t>(n);
      }
    if (monoid_violations(table, 0).empty()) {
      FiniteMonoid m;
      m.n = n;
      m.table = table;
      m.identity = 0;
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace qc
