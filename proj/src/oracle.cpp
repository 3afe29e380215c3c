// Independent brute-force witness for the classification. Deliberately kept
// free of the constructor code paths: R candidates are enumerated from the
// axioms alone.
#include "qc/classify.hpp"

namespace qc {

namespace {

struct OracleSearch {
  const FiniteGroup& g;
  int n;
  std::vector<int> b;       // b[x*n+y] = second component of R(x,y); -1 unknown
  std::vector<int> a;       // first component, determined by mu R = mu
  std::vector<bool> used;   // output pairs already taken (bijectivity)
  std::vector<std::pair<int, int>> cells;  // unknown cells in lex order
  std::vector<std::vector<int>>& results;

  OracleSearch(const FiniteGroup& group, std::vector<std::vector<int>>& out)
      : g(group), n(group.n), results(out) {
    b.assign(static_cast<size_t>(n) * n, -1);
    a.assign(static_cast<size_t>(n) * n, -1);
    used.assign(static_cast<size_t>(n) * n, false);
    // unit constraints pin the boundary: R(e,y) = (y,e), R(x,e) = (e,x)
    for (int y = 0; y < n; ++y) set(g.identity, y, g.identity);
    for (int x = 0; x < n; ++x)
      if (x != g.identity) set(x, g.identity, x);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b[static_cast<size_t>(x) * n + y] < 0) cells.emplace_back(x, y);
  }

  bool known(int x, int y) const { return b[static_cast<size_t>(x) * n + y] >= 0; }
  int bv(int x, int y) const { return b[static_cast<size_t>(x) * n + y]; }
  int av(int x, int y) const { return a[static_cast<size_t>(x) * n + y]; }

  void set(int x, int y, int bval) {
    const size_t cell = static_cast<size_t>(x) * n + y;
    b[cell] = bval;
    a[cell] = g.op(g.op(x, y), g.invert(bval));  // com: a b = x y
    used[static_cast<size_t>(av(x, y)) * n + bval] = true;
  }
  void unset(int x, int y) {
    const size_t cell = static_cast<size_t>(x) * n + y;
    used[static_cast<size_t>(av(x, y)) * n + bv(x, y)] = false;
    b[cell] = -1;
    a[cell] = -1;
  }

  // mur: R(x, yz) = (a(x,y) a(b(x,y),z), b(b(x,y),z))
  // mul: R(xy, z) = (a(x, a(y,z)), b(x, a(y,z)) b(y,z))
  // ybe checked on fully known triples
  bool consistent() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!known(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          // mur triple (x,y,z) touches cells (x,y), (b(x,y),z), (x, yz)
          if (known(bv(x, y), z) && known(x, g.op(y, z))) {
            int lhs_a = av(x, g.op(y, z)), lhs_b = bv(x, g.op(y, z));
            int rhs_a = g.op(av(x, y), av(bv(x, y), z));
            int rhs_b = bv(bv(x, y), z);
            if (lhs_a != rhs_a || lhs_b != rhs_b) return false;
          }
          // mul triple (z,x,y): R(zx, y) vs via R(x,y)
          if (known(z, av(x, y)) && known(g.op(z, x), y)) {
            int lhs_a = av(g.op(z, x), y), lhs_b = bv(g.op(z, x), y);
            int rhs_a = av(z, av(x, y));
            int rhs_b = g.op(bv(z, av(x, y)), bv(x, y));
            if (lhs_a != rhs_a || lhs_b != rhs_b) return false;
          }
        }
      }
    return true;
  }

  bool full_check() {
    SetYB r{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        r.table[static_cast<size_t>(x) * n + y] = av(x, y) * n + bv(x, y);
    if (!r.is_bijection()) return false;
    auto rep = qc_suite(g, r);
    return rep.qc_ok();
  }

  void run(size_t depth) {
    if (depth == cells.size()) {
      if (full_check()) {
        std::vector<int> table(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x) * n + y] = av(x, y) * n + bv(x, y);
        results.push_back(std::move(table));
      }
      return;
    }
    auto [x, y] = cells[depth];
    for (int bval = 0; bval < n; ++bval) {
      int aval = g.op(g.op(x, y), g.invert(bval));
      if (used[static_cast<size_t>(aval) * n + bval]) continue;  // bijectivity prune
      set(x, y, bval);
      if (consistent()) run(depth + 1);
      unset(x, y);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> brute_force_qc_tables(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  OracleSearch search(g, out);
  search.run(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qc
