#include "qc/matrix.hpp"

namespace qc {

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool sp_equal(const SpMat& a, const SpMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SpMat d = a - b;
  d.prune([](Eigen::Index, Eigen::Index, const Rat& v) { return !v.is_zero(); });
  return d.nonZeros() == 0;
}

bool mat_is_identity(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

SpMat sp_kron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<Rat>> trip;
  trip.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ja = 0; ja < a.outerSize(); ++ja)
    for (SpMat::InnerIterator ia(a, ja); ia; ++ia)
      for (int jb = 0; jb < b.outerSize(); ++jb)
        for (SpMat::InnerIterator ib(b, jb); ib; ++ib)
          trip.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                            ia.value() * ib.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

Mat sp_to_dense(const SpMat& a) {
  Mat out = Mat::Zero(a.rows(), a.cols());
  for (int j = 0; j < a.outerSize(); ++j)
    for (SpMat::InnerIterator it(a, j); it; ++it) out(it.row(), it.col()) = it.value();
  return out;
}

SpMat dense_to_sp(const Mat& a) {
  std::vector<Eigen::Triplet<Rat>> trip;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) trip.emplace_back(i, j, a(i, j));
  SpMat out(a.rows(), a.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

Mat mat_invert(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("Singular", "inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  Mat a = m;
  Mat inv = Mat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error("Singular", "matrix has no exact inverse");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rat p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rat f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool mat_is_invertible(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  return mat_rank(m) == m.rows();
}

int mat_rank(Mat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rat p = m(row, col);
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rat f = m(r, col) / p;
      for (Eigen::Index j = col; j < cols; ++j) m(r, j) -= f * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Mat permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Mat out = Mat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) out(perm[static_cast<size_t>(j)], j) = Rat(1);
  return out;
}

}  // namespace qc
