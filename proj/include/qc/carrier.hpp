#pragma once

#include "qc/algebra.hpp"
#include "qc/error.hpp"
#include "qc/group.hpp"
#include "qc/matrix.hpp"

#include <vector>

namespace qc {

// The two concrete carriers: finite sets with cartesian product, and exact
// rational vector spaces with tensor product. Objects are fully described by
// their size (set cardinality / dimension).
enum class CarrierKind { Set, Vec };

struct Obj {
  CarrierKind kind;
  int size = 0;
};

inline Obj tensor_obj(const Obj& a, const Obj& b) { return {a.kind, a.size * b.size}; }
inline Obj unit_obj(CarrierKind k) { return {k, 1}; }

// Carrier morphism: a total map table (sets) or a sparse matrix (spaces).
// Tensor index convention: pair (x,y) with y-size s encodes as x*s + y.
class Mor {
 public:
  Mor() = default;
  static Mor set_map(int src, int dst, std::vector<int> table);
  static Mor lin_map(SpMat m);
  static Mor lin_map(const Mat& m);
  static Mor identity(const Obj& o);

  CarrierKind kind() const { return kind_; }
  int src() const { return src_; }
  int dst() const { return dst_; }
  Obj src_obj() const { return {kind_, src_}; }
  Obj dst_obj() const { return {kind_, dst_}; }

  Mor compose(const Mor& f) const;  // *this after f
  Mor tensor(const Mor& g) const;
  bool equals(const Mor& o) const;
  bool is_invertible() const;
  Mor inverse() const;

  int apply(int x) const;                    // set maps
  const std::vector<int>& table() const { return table_; }
  const SpMat& sparse() const { return mat_; }
  Mat dense() const;

 private:
  CarrierKind kind_ = CarrierKind::Set;
  int src_ = 0, dst_ = 0;
  std::vector<int> table_;
  SpMat mat_;
};

// Monoid object in a carrier: A with mul : A(x)A -> A and unit : 1 -> A.
struct MonoidObject {
  Obj carrier;
  Mor mul;
  Mor unit;
};

VerdictBundle check_monoid_object(const MonoidObject& m);

MonoidObject monoid_object(const FiniteMonoid& m);
MonoidObject monoid_object(const AlgebraSC& a);
// Componentwise monoid structure on A (x) B and on powers M^(x)n.
MonoidObject tensor_monoid(const MonoidObject& a, const MonoidObject& b);
MonoidObject power_monoid(const MonoidObject& m, int n);

// Iterated multiplication mu(k) : A^(x)k -> A; mu(0) = unit, mu(1) = id.
Mor iterated_mult(const MonoidObject& m, int k);

// Free monoidal functor on a monoid: a monotone f : [n] -> [m] (0-indexed
// entries, weakly increasing) goes to mu(|f^-1(0)|) (x) ... (x) mu(|f^-1(m-1)|).
// Throws Error("NotMonotone").
Mor eval_monotone(const MonoidObject& a, const std::vector<int>& f, int m);

// Is f : A (x) A -> A (x) A a monoid homomorphism for the power structure?
bool is_monoid_hom(const MonoidObject& src, const MonoidObject& dst, const Mor& f);

}  // namespace qc
