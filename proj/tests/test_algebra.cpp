#include "doctest.h"
#include "qc/algebra.hpp"
#include "qc/group.hpp"
#include "qc/yb.hpp"

using namespace qc;

namespace {

Vec basis(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v(i) = Rat(1);
  return v;
}

}  // namespace

TEST_CASE("group algebras of catalog groups satisfy every Hopf axiom") {
  for (int order = 1; order <= 8; ++order)
    for (const auto& g : catalog(order)) {
      HopfSC h = group_algebra(g);
      auto rep = check_hopf(h);
      CHECK(rep.all_ok());
    }
}

TEST_CASE("antipode of a group algebra is the inversion permutation") {
  auto trivial = group_algebra(cyclic_group(1));
  CHECK(mat_is_identity(trivial.antipode));
  auto z2 = group_algebra(cyclic_group(2));
  CHECK(mat_is_identity(z2.antipode));  // elements self-inverse
  auto s3 = catalog_by_name("S3");
  HopfSC h = group_algebra(s3);
  for (int g = 0; g < 6; ++g) {
    Vec img = h.antipode * basis(6, g);
    CHECK(img(s3.invert(g)) == Rat(1));
  }
}

TEST_CASE("corrupting the antipode breaks exactly the antipode axiom") {
  HopfSC h = group_algebra(catalog_by_name("S3"));
  h.antipode = Mat::Identity(6, 6);  // wrong: S3 has non-involutive elements
  h.antipode_inv = h.antipode;
  auto rep = check_hopf(h);
  CHECK(rep.associativity.ok);
  CHECK(rep.coassociativity.ok);
  CHECK(rep.counit.ok);
  CHECK(!rep.antipode.ok);
}

TEST_CASE("dual function Hopf algebra of Z/2 passes all axioms and is commutative") {
  HopfSC h = dual_function_hopf(cyclic_group(2));
  CHECK(check_hopf(h).all_ok());
  CHECK(h.is_commutative());
  // also the dual of a non-abelian group: commutative algebra, all axioms
  HopfSC hs3 = dual_function_hopf(catalog_by_name("S3"));
  CHECK(check_hopf(hs3).all_ok());
  CHECK(hs3.is_commutative());
}

TEST_CASE("skew group algebra: constant cocycle reproduces the group algebra") {
  for (const char* name : {"Z/2", "S3"}) {
    auto g = catalog_by_name(name);
    AlgebraSC skew = skew_group_algebra(constant_two_cocycle(g));
    HopfSC plain = group_algebra(g);
    CHECK(skew.sc == plain.sc);
    CHECK(mat_equal(skew.unit, plain.unit));
  }
}

TEST_CASE("quaternion cocycle algebra has e_a^2 = -e_e") {
  AlgebraSC a = skew_group_algebra(quaternion_cocycle());
  CHECK(a.dim == 4);
  for (int i = 1; i < 4; ++i) {
    Vec sq = a.mul(basis(4, i), basis(4, i));
    CHECK(sq(0) == Rat(-1));  // each imaginary unit squares to -1
  }
  // i j = k and j i = -k
  Vec ij = a.mul(basis(4, 1), basis(4, 2));
  Vec ji = a.mul(basis(4, 2), basis(4, 1));
  CHECK(ij(3) == Rat(1));
  CHECK(ji(3) == Rat(-1));
}

TEST_CASE("skew algebra associativity is equivalent to the cocycle law") {
  auto q = quaternion_cocycle();
  CHECK_NOTHROW(skew_group_algebra(q));
  // perturb one sign: the cocycle check and the algebra construction must
  // fail together
  auto bad = q.alpha;
  bad[static_cast<size_t>(1) * 4 + 2] = -bad[static_cast<size_t>(1) * 4 + 2];
  CHECK_THROWS_AS(check_two_cocycle(bad, q.group), Error);
  TwoCocycleQ forced{q.group, bad};
  CHECK_THROWS_WITH_AS(skew_group_algebra(forced), doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("k_chi_span: trivial character gives the plain group algebra") {
  auto z3 = cyclic_group(3);
  auto ext = validate_central_extension(z3, {0}, {Rat(1)});
  auto [algebra, cocycle] = k_chi_span(ext);
  CHECK(algebra.dim == 3);
  CHECK(algebra.sc == group_algebra(z3).sc);
  for (const Rat& v : cocycle.alpha) CHECK(v == Rat(1));
}

TEST_CASE("k_chi_span: Z/2 -> Z/4 -> Z/2 with faithful chi gives e_1^2 = -e_0") {
  auto z4 = cyclic_group(4);
  auto ext = validate_central_extension(z4, {0, 2}, {Rat(1), Rat(-1)});
  auto [algebra, cocycle] = k_chi_span(ext);
  CHECK(algebra.dim == 2);
  Vec sq = algebra.mul(basis(2, 1), basis(2, 1));
  CHECK(sq(0) == Rat(-1));
  CHECK(sq(1) == Rat(0));
  // section independence at the computable level: both hard-coded sections
  // give a 2-dim algebra with the same relation
  for (const std::vector<int>& section : {std::vector<int>{0, 1}, std::vector<int>{0, 3}}) {
    auto [alg2, coc2] = k_chi_span_with_section(ext, section);
    CHECK(alg2.dim == 2);
    Vec sq2 = alg2.mul(basis(2, 1), basis(2, 1));
    CHECK(sq2(0) == Rat(-1));
  }
}

TEST_CASE("k_chi_span: Q8 over its center gives the rational quaternion algebra") {
  auto q8 = catalog_by_name("Q8");
  int minus_one = -1;
  for (int x = 0; x < 8; ++x)
    if (q8.order_of(x) == 2) minus_one = x;
  auto ext = validate_central_extension(q8, {0, minus_one}, {Rat(1), Rat(-1)});
  auto [algebra, cocycle] = k_chi_span(ext);
  CHECK(algebra.dim == 4);
  CHECK(cocycle.alpha == quaternion_cocycle().alpha);
  CHECK(algebra.sc == skew_group_algebra(quaternion_cocycle()).sc);
}

TEST_CASE("comodule algebras from skew group algebras") {
  for (auto alpha : {constant_two_cocycle(cyclic_group(2)), quaternion_cocycle(),
                     constant_two_cocycle(catalog_by_name("S3"))}) {
    ComoduleAlgebra c = comodule_from_skew(alpha);
    CHECK(check_comodule(c).all_ok());
  }
  // the coaction of the constant Z/2 case is the diagonal pairing
  ComoduleAlgebra c = comodule_from_skew(constant_two_cocycle(cyclic_group(2)));
  CHECK(c.coaction(0, 0) == Rat(1));
  CHECK(c.coaction(3, 1) == Rat(1));  // e_1 -> e_1 (x) e_1 at index 1*2+1
  CHECK(c.coaction(1, 0) == Rat(0));
  // corrupted coaction fails the axioms
  ComoduleAlgebra bad = c;
  bad.coaction(0, 0) = Rat(0);
  bad.coaction(2, 0) = Rat(1);  // e_0 -> e_1 (x) e_0: not coassociative/unital
  CHECK(!check_comodule(bad).all_ok());
}

TEST_CASE("extension near-commutativity matches the skew operator, orders <= 8") {
  // central subgroups of size <= 2 carry the rational characters {1} / {1,-1};
  // the group-theoretic commutator test must agree with R^2 = I for the
  // operator of the induced skew group algebra
  for (int order = 1; order <= 8; ++order)
    for (const auto& g : catalog(order)) {
      std::vector<std::vector<int>> centrals{{0}};
      for (int z = 1; z < g.n; ++z) {
        if (g.order_of(z) != 2) continue;
        bool central = true;
        for (int y = 0; y < g.n && central; ++y) central = g.op(z, y) == g.op(y, z);
        if (central) centrals.push_back({0, z});
      }
      for (const auto& a : centrals) {
        std::vector<Rat> chi{Rat(1)};
        if (a.size() == 2) chi.push_back(Rat(-1));  // faithful on Z/2
        auto ext = validate_central_extension(g, a, chi);
        auto [algebra, cocycle] = k_chi_span(ext);
        LinYB r = yb_from_skew_group(cocycle);
        CHECK(near_commutative_extension_test(ext) == check_nearly_commutative(r));
      }
    }
}

TEST_CASE("tensor algebra multiplies componentwise") {
  auto a = skew_group_algebra(quaternion_cocycle());
  auto h = group_algebra(cyclic_group(2));
  AlgebraSC t = tensor_algebra(a, static_cast<const AlgebraSC&>(h));
  CHECK(t.dim == 8);
  // (e_i (x) e_1)(e_i (x) e_1) = (e_i e_i) (x) (e_1 e_1) = -e_e (x) e_0
  Vec x = Vec::Zero(8);
  x(1 * 2 + 1) = Rat(1);
  Vec sq = t.mul(x, x);
  CHECK(sq(0 * 2 + 0) == Rat(-1));
}
