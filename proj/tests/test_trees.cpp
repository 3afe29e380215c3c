#include "doctest.h"
#include "qc/cosimplicial.hpp"
#include "qc/group.hpp"
#include "qc/trees.hpp"

using namespace qc;

TEST_CASE("tree validation admits childless inner nodes, rejects bad tables") {
  CHECK_NOTHROW(validate_tree(0, 1, {}));       // S([0])
  CHECK_NOTHROW(validate_tree(3, 2, {1, 0, 1}));  // non-monotone t allowed
  CHECK_THROWS_AS(validate_tree(2, 1, {0, 1}), Error);
  CHECK_THROWS_AS(validate_tree(2, 0, {0, 0}), Error);
}

TEST_CASE("morphism validation: commuting square and fibrewise order") {
  Tree2 src = validate_tree(2, 2, {0, 1});
  Tree2 dst = s_functor(2);
  CHECK_NOTHROW(validate_tree_morphism(src, dst, {0, 1}, {0, 0}));
  CHECK_NOTHROW(validate_tree_morphism(src, dst, {1, 0}, {0, 0}));
  // f1 must be monotone
  Tree2 two = validate_tree(2, 2, {0, 1});
  CHECK_THROWS_AS(validate_tree_morphism(two, two, {1, 0}, {1, 0}), Error);
  // fibre order violation: swap inside a single fibre
  Tree2 pair = s_functor(2);
  CHECK_THROWS_AS(validate_tree_morphism(pair, pair, {1, 0}, {0}), Error);
}

TEST_CASE("composition and tensor satisfy the category laws") {
  TreeMorphism m = merge_id_generator();
  CHECK(compose(tree_identity(m.dst), m) == m);
  CHECK(compose(m, tree_identity(m.src)) == m);
  // two elementary merges on a 3-tip tree collapse to one fibre
  Tree2 three = validate_tree(3, 3, {0, 1, 2});
  TreeMorphism first = tensor(merge_id_generator(), tree_identity(s_functor(1)));
  CHECK(first.src == three);
  // f (x) identity on the empty tree is f
  Tree2 empty = validate_tree(0, 0, {});
  CHECK(tensor(m, tree_identity(empty)) == m);
  CHECK(tensor(m, m).src.tips == 4);
}

TEST_CASE("S functor: objects, morphisms, monoid structure") {
  Tree2 s0 = s_functor(0);
  CHECK(s0.tips == 0);
  CHECK(s0.inner == 1);
  CHECK(s_morphism({0, 1}, 2) == tree_identity(s_functor(2)));
  TreeMorphism mul = s_multiplication(1);
  CHECK(mul.f2 == std::vector<int>{0, 0});
  CHECK(mul.f1 == std::vector<int>{0, 0});
  // associativity and unit of the S([1]) monoid at the tree level
  TreeMorphism mul_l = compose(mul, tensor(mul, tree_identity(s_functor(1))));
  TreeMorphism mul_r = compose(mul, tensor(tree_identity(s_functor(1)), mul));
  CHECK(mul_l == mul_r);
  TreeMorphism unit = validate_tree_morphism(s_functor(0), s_functor(1), {}, {0});
  TreeMorphism left_unit = compose(mul, tensor(unit, tree_identity(s_functor(1))));
  CHECK(left_unit.f2 == std::vector<int>{0});
}

TEST_CASE("eval: generators realise the two level-2 coverings") {
  auto s3 = catalog_by_name("S3");
  CobarComplex cx = cobar_from_group(s3);
  auto coverings = covering_maps(cx, 2);
  Mor merge_id = eval(merge_id_generator(), cx);
  Mor merge_swap = eval(merge_swap_generator(), cx);
  CHECK(merge_id.equals(coverings[1].second));    // ({1},{2}) = mu(d1 (x) d0)
  CHECK(merge_swap.equals(coverings[2].second));  // ({2},{1}) = mu(d0 (x) d1)
  // identity morphism evaluates to the identity
  Mor id = eval(tree_identity(s_functor(2)), cx);
  CHECK(id.equals(Mor::identity(cx.component(2).carrier)));
  // a childless inner node contributes the unit component
  Tree2 childless = validate_tree(0, 1, {});
  Mor unit_map = eval(validate_tree_morphism(childless, childless, {}, {0}), cx);
  CHECK(unit_map.src() == 1);
}

TEST_CASE("tip bijectivity and covering decomposition") {
  CHECK(is_tip_bijective(merge_swap_generator()));
  CHECK(!is_tip_bijective(s_multiplication(1)));
  // identity decomposes into per-fibre identities
  Tree2 t = validate_tree(3, 2, {0, 0, 1});
  auto factors = decompose_covering(tree_identity(t));
  CHECK(factors.size() == 2);
  TreeMorphism re = tensor(factors[0], factors[1]);
  CHECK(re == tree_identity(t));
  // a two-factor covering recomposes exactly
  TreeMorphism f = tensor(merge_swap_generator(), merge_id_generator());
  auto parts = decompose_covering(f);
  CHECK(parts.size() == 2);
  CHECK(tensor(parts[0], parts[1]) == f);
  // the generator is its own single factor
  auto single = decompose_covering(merge_swap_generator());
  CHECK(single.size() == 1);
  CHECK(single[0] == merge_swap_generator());
}

TEST_CASE("generator factorization: basic words and boundaries") {
  auto layers_id = factor_into_generators(merge_id_generator());
  REQUIRE(layers_id.size() == 1);
  REQUIRE(layers_id[0].items.size() == 1);
  CHECK(layers_id[0].items[0].kind == GenItem::MergeId);
  auto layers_swap = factor_into_generators(merge_swap_generator());
  CHECK(layers_swap[0].items[0].kind == GenItem::MergeSwap);
  // identity on an interleaved tree factors as a single identity item
  Tree2 inter = validate_tree(3, 2, {1, 0, 1});
  auto layers = factor_into_generators(tree_identity(inter));
  CHECK(layer_morphism(layers[0]) == tree_identity(inter));

  // the full three-tip merge is tip-bijective but outside the closure of the
  // two generators: no composite of tensor words can merge a two-tip fibre
  Tree2 discrete3 = validate_tree(3, 3, {0, 1, 2});
  TreeMorphism full = validate_tree_morphism(discrete3, s_functor(3), {0, 1, 2}, {0, 0, 0});
  CHECK(is_tip_bijective(full));
  CHECK_THROWS_WITH_AS(factor_into_generators(full), doctest::Contains("NotFactorable"), Error);
  auto closure = generator_closure(3);
  bool found = false;
  for (const auto& m : closure) found = found || m == full;
  CHECK(!found);

  CHECK_THROWS_WITH_AS(factor_into_generators(s_multiplication(1)),
                       doctest::Contains("NotTipBijective"), Error);
}

TEST_CASE("generator closure contains exactly the single-layer merge words") {
  auto closure = generator_closure(2);
  bool has_id = false, has_swap = false;
  for (const auto& m : closure) {
    if (m == merge_id_generator()) has_id = true;
    if (m == merge_swap_generator()) has_swap = true;
    CHECK(is_tip_bijective(m));
    auto layers = factor_into_generators(m);
    TreeMorphism re = layer_morphism(layers[0]);
    for (size_t l = 1; l < layers.size(); ++l) re = compose(layer_morphism(layers[l]), re);
    CHECK(re == m);
  }
  CHECK(has_id);
  CHECK(has_swap);
}

TEST_CASE("eval of generated morphisms is invertible over a group cobar") {
  CobarComplex z3 = cobar_from_group(cyclic_group(3));
  for (const auto& m : generator_closure(2)) {
    if (m.src.tips == 0) continue;
    CHECK(eval(m, z3).is_invertible());
  }
}
