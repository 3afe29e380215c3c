#pragma once

#include "qc/error.hpp"
#include "qc/rational.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <vector>

namespace Eigen {
template <>
struct NumTraits<qc::Rat> : GenericNumTraits<qc::Rat> {
  typedef qc::Rat Real;
  typedef qc::Rat NonInteger;
  typedef qc::Rat Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};
}  // namespace Eigen

namespace qc {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Rat>;

// Exact equality. Eigen's cwise comparison paths are avoided on purpose: the
// boost backend's templated constructors are not SFINAE-safe against Eigen
// expression types.
bool mat_equal(const Mat& a, const Mat& b);
bool sp_equal(const SpMat& a, const SpMat& b);
bool mat_is_identity(const Mat& a);

Mat kron(const Mat& a, const Mat& b);
SpMat sp_kron(const SpMat& a, const SpMat& b);

Mat sp_to_dense(const SpMat& a);
SpMat dense_to_sp(const Mat& a);

// Exact Gauss-Jordan inverse over Q. Throws Error("Singular", ...).
// (The arbitrary-precision rational scalar makes plain elimination exact;
// fraction-free variants buy nothing here.)
Mat mat_invert(const Mat& m);
bool mat_is_invertible(const Mat& m);

// Rank via exact elimination; used for invertibility of rectangular maps.
int mat_rank(Mat m);

Mat permutation_matrix(const std::vector<int>& perm);  // col j has 1 at perm[j]

}  // namespace qc
