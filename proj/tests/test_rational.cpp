#include "doctest.h"
#include "qc/matrix.hpp"
#include "qc/rational.hpp"

#include <random>

using qc::Mat;
using qc::Rat;

TEST_CASE("rational arithmetic is exact and reduced") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK((a - b).str() == "1/6");
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(Rat(-2, 4).str() == "-1/2");
  CHECK(Rat::parse("7/21") == Rat(1, 3));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK_THROWS(Rat::parse("x"));
  CHECK_THROWS(Rat(1, 0));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("identity and unitriangular inverses") {
  Mat id = Mat::Identity(3, 3);
  CHECK(qc::mat_equal(qc::mat_invert(id), id));
  Mat u(2, 2);
  u << Rat(1), Rat(1), Rat(0), Rat(1);
  Mat ui(2, 2);
  ui << Rat(1), Rat(-1), Rat(0), Rat(1);
  CHECK(qc::mat_equal(qc::mat_invert(u), ui));
}

TEST_CASE("random invertible matrices invert exactly up to 8x8") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat m(n, n);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) m(i, j) = Rat(num(rng), 1 + (num(rng) & 3));
      } while (!qc::mat_is_invertible(m));
      Mat prod = m * qc::mat_invert(m);
      CHECK(qc::mat_is_identity(prod));
    }
  }
}

TEST_CASE("singular matrices are rejected") {
  Mat z = Mat::Zero(2, 2);
  CHECK_THROWS_WITH_AS(qc::mat_invert(z), doctest::Contains("Singular"), qc::Error);
  Mat r(2, 2);
  r << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK(!qc::mat_is_invertible(r));
}

TEST_CASE("kronecker product matches index convention (i*d+j)") {
  Mat a(2, 2), b(2, 2);
  a << Rat(1), Rat(2), Rat(3), Rat(4);
  b << Rat(0), Rat(1), Rat(1), Rat(0);
  Mat k = qc::kron(a, b);
  CHECK(k.rows() == 4);
  // row = i*2+r, col = j*2+c: entry a(i,j)*b(r,c)
  CHECK(k(0, 1) == Rat(1));  // a(0,0)*b(0,1)
  CHECK(k(2, 3) == Rat(4));  // a(1,1)*b(0,1)
  CHECK(k(3, 0) == Rat(3));  // a(1,0)*b(1,0)
  CHECK(qc::sp_equal(qc::sp_kron(qc::dense_to_sp(a), qc::dense_to_sp(b)), qc::dense_to_sp(k)));
}
