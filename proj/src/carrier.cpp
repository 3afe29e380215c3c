#include "qc/carrier.hpp"

#include <numeric>

namespace qc {

Mor Mor::set_map(int src, int dst, std::vector<int> table) {
  if (table.size() != static_cast<size_t>(src))
    throw Error("BadTable", "set map table has wrong size");
  for (int v : table)
    if (v < 0 || v >= dst) throw Error("BadTable", "set map value out of range");
  Mor m;
  m.kind_ = CarrierKind::Set;
  m.src_ = src;
  m.dst_ = dst;
  m.table_ = std::move(table);
  return m;
}

Mor Mor::lin_map(SpMat mat) {
  Mor m;
  m.kind_ = CarrierKind::Vec;
  m.src_ = static_cast<int>(mat.cols());
  m.dst_ = static_cast<int>(mat.rows());
  mat.prune([](Eigen::Index, Eigen::Index, const Rat& v) { return !v.is_zero(); });
  m.mat_ = std::move(mat);
  m.mat_.makeCompressed();
  return m;
}

Mor Mor::lin_map(const Mat& m) { return lin_map(dense_to_sp(m)); }

Mor Mor::identity(const Obj& o) {
  if (o.kind == CarrierKind::Set) {
    std::vector<int> t(static_cast<size_t>(o.size));
    std::iota(t.begin(), t.end(), 0);
    return set_map(o.size, o.size, std::move(t));
  }
  SpMat id(o.size, o.size);
  id.setIdentity();
  return lin_map(std::move(id));
}

Mor Mor::compose(const Mor& f) const {
  if (kind_ != f.kind_ || src_ != f.dst_) throw Error("NotComposable", "morphism shapes differ");
  if (kind_ == CarrierKind::Set) {
    std::vector<int> t(f.table_.size());
    for (size_t i = 0; i < f.table_.size(); ++i)
      t[i] = table_[static_cast<size_t>(f.table_[i])];
    return set_map(f.src_, dst_, std::move(t));
  }
  return lin_map(SpMat(mat_ * f.mat_));
}

Mor Mor::tensor(const Mor& g) const {
  if (kind_ != g.kind_) throw Error("NotComposable", "cannot tensor across carriers");
  if (kind_ == CarrierKind::Set) {
    std::vector<int> t(static_cast<size_t>(src_) * g.src_);
    for (int x = 0; x < src_; ++x)
      for (int y = 0; y < g.src_; ++y)
        t[static_cast<size_t>(x) * g.src_ + y] =
            table_[static_cast<size_t>(x)] * g.dst_ + g.table_[static_cast<size_t>(y)];
    return set_map(src_ * g.src_, dst_ * g.dst_, std::move(t));
  }
  return lin_map(sp_kron(mat_, g.mat_));
}

bool Mor::equals(const Mor& o) const {
  if (kind_ != o.kind_ || src_ != o.src_ || dst_ != o.dst_) return false;
  if (kind_ == CarrierKind::Set) return table_ == o.table_;
  return sp_equal(mat_, o.mat_);
}

bool Mor::is_invertible() const {
  if (kind_ == CarrierKind::Set) {
    if (src_ != dst_) return false;
    std::vector<bool> seen(static_cast<size_t>(dst_), false);
    for (int v : table_) {
      if (seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = true;
    }
    return true;
  }
  if (src_ != dst_) return false;
  return mat_is_invertible(sp_to_dense(mat_));
}

Mor Mor::inverse() const {
  if (!is_invertible()) throw Error("Singular", "morphism is not invertible");
  if (kind_ == CarrierKind::Set) {
    std::vector<int> t(static_cast<size_t>(dst_));
    for (int x = 0; x < src_; ++x) t[static_cast<size_t>(table_[static_cast<size_t>(x)])] = x;
    return set_map(dst_, src_, std::move(t));
  }
  return lin_map(mat_invert(sp_to_dense(mat_)));
}

int Mor::apply(int x) const {
  if (kind_ != CarrierKind::Set) throw Error("BadTable", "apply() needs a set map");
  return table_[static_cast<size_t>(x)];
}

Mat Mor::dense() const {
  if (kind_ == CarrierKind::Vec) return sp_to_dense(mat_);
  Mat m = Mat::Zero(dst_, src_);
  for (int x = 0; x < src_; ++x) m(table_[static_cast<size_t>(x)], x) = Rat(1);
  return m;
}

VerdictBundle check_monoid_object(const MonoidObject& m) {
  VerdictBundle out;
  const Obj& a = m.carrier;
  Mor id = Mor::identity(a);
  // mu(mu (x) I) = mu(I (x) mu)
  Mor lhs = m.mul.compose(m.mul.tensor(id));
  Mor rhs = m.mul.compose(id.tensor(m.mul));
  out.add(lhs.equals(rhs) ? Verdict::pass("mu_associative")
                          : Verdict::fail("mu_associative", "mu(mu(x)I) != mu(I(x)mu)"));
  Mor lu = m.mul.compose(m.unit.tensor(id));
  Mor ru = m.mul.compose(id.tensor(m.unit));
  out.add(lu.equals(id) && ru.equals(id) ? Verdict::pass("unit_axiom")
                                         : Verdict::fail("unit_axiom", "unit law fails"));
  return out;
}

MonoidObject monoid_object(const FiniteMonoid& m) {
  std::vector<int> mul(static_cast<size_t>(m.n) * m.n);
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) mul[static_cast<size_t>(a) * m.n + b] = m.op(a, b);
  return {Obj{CarrierKind::Set, m.n}, Mor::set_map(m.n * m.n, m.n, std::move(mul)),
          Mor::set_map(1, m.n, {m.identity})};
}

MonoidObject monoid_object(const AlgebraSC& a) {
  SpMat mu(a.dim, static_cast<Eigen::Index>(a.dim) * a.dim);
  std::vector<Eigen::Triplet<Rat>> trip;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        if (!a.c(i, j, k).is_zero()) trip.emplace_back(k, i * a.dim + j, a.c(i, j, k));
  mu.setFromTriplets(trip.begin(), trip.end());
  SpMat unit(a.dim, 1);
  for (int i = 0; i < a.dim; ++i)
    if (!a.unit(i).is_zero()) unit.insert(i, 0) = a.unit(i);
  return {Obj{CarrierKind::Vec, a.dim}, Mor::lin_map(std::move(mu)),
          Mor::lin_map(std::move(unit))};
}

namespace {

// Middle-four interchange permutation A^(x)n (x) A (x) A^(x)n (x) A ->
// A^(x)n (x) A^(x)n (x) A (x) A used when building power monoids.
Mor middle_swap(CarrierKind kind, int left, int right) {
  // swap of two adjacent blocks of sizes right and left: X(x)Y -> Y(x)X
  const int total = left * right;
  if (kind == CarrierKind::Set) {
    std::vector<int> t(static_cast<size_t>(total));
    for (int x = 0; x < right; ++x)
      for (int y = 0; y < left; ++y) t[static_cast<size_t>(x) * left + y] = y * right + x;
    return Mor::set_map(total, total, std::move(t));
  }
  SpMat m(total, total);
  std::vector<Eigen::Triplet<Rat>> trip;
  for (int x = 0; x < right; ++x)
    for (int y = 0; y < left; ++y) trip.emplace_back(y * right + x, x * left + y, Rat(1));
  m.setFromTriplets(trip.begin(), trip.end());
  return Mor::lin_map(std::move(m));
}

}  // namespace

MonoidObject tensor_monoid(const MonoidObject& a, const MonoidObject& b) {
  const int sza = a.carrier.size, szb = b.carrier.size;
  Obj out{a.carrier.kind, sza * szb};
  // mu_{A (x) B} = (mu_A (x) mu_B) . (I_A (x) swap_{B,A} (x) I_B)
  Mor ida = Mor::identity(a.carrier), idb = Mor::identity(b.carrier);
  Mor swap = middle_swap(a.carrier.kind, sza, szb);  // B (x) A -> A (x) B
  Mor rearrange = ida.tensor(swap).tensor(idb);
  Mor mul = a.mul.tensor(b.mul).compose(rearrange);
  Mor unit = a.unit.tensor(b.unit);
  return {out, std::move(mul), std::move(unit)};
}

MonoidObject power_monoid(const MonoidObject& m, int n) {
  if (n == 0) {
    Obj u = unit_obj(m.carrier.kind);
    return {u, Mor::identity(u), Mor::identity(u)};
  }
  if (n == 1) return m;
  return tensor_monoid(power_monoid(m, n - 1), m);
}

Mor iterated_mult(const MonoidObject& m, int k) {
  if (k == 0) return m.unit;
  Mor acc = Mor::identity(m.carrier);
  for (int i = 2; i <= k; ++i) {
    // mu(i) = mu . (mu(i-1) (x) I)
    acc = m.mul.compose(acc.tensor(Mor::identity(m.carrier)));
  }
  return acc;
}

Mor eval_monotone(const MonoidObject& a, const std::vector<int>& f, int m) {
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] > f[i + 1]) throw Error("NotMonotone", "map is not order preserving");
  for (int v : f)
    if (v < 0 || v >= m) throw Error("NotMonotone", "value out of range");
  std::vector<int> fibre(static_cast<size_t>(m), 0);
  for (int v : f) ++fibre[static_cast<size_t>(v)];
  Mor acc = Mor::identity(unit_obj(a.carrier.kind));
  for (int i = 0; i < m; ++i) acc = acc.tensor(iterated_mult(a, fibre[static_cast<size_t>(i)]));
  return acc;
}

bool is_monoid_hom(const MonoidObject& src, const MonoidObject& dst, const Mor& f) {
  if (!f.compose(src.unit).equals(dst.unit)) return false;
  Mor lhs = f.compose(src.mul);
  Mor rhs = dst.mul.compose(f.tensor(f));
  return lhs.equals(rhs);
}

}  // namespace qc
