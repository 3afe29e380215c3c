#pragma once

#include "qc/carrier.hpp"
#include "qc/cosimplicial.hpp"
#include "qc/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qc {

// Pruned height-2 tree: tips [0..tips) mapped onto inner nodes [0..inner).
// t need not be monotone; childless inner nodes are admitted so the functor
// [n] -> ([n] -> [1]) is total at n = 0.
struct Tree2 {
  int tips = 0;
  int inner = 0;
  std::vector<int> t;  // t[tip] = inner node

  std::vector<std::vector<int>> fibres() const;  // tips per inner node, ascending
  bool operator==(const Tree2& o) const = default;
};

Tree2 validate_tree(int tips, int inner, std::vector<int> t);

// (f2, f1): f1 monotone on inner nodes, f2 arbitrary on tips but monotone on
// each fibre, commuting with the tree maps.
struct TreeMorphism {
  Tree2 src, dst;
  std::vector<int> f2;  // tips
  std::vector<int> f1;  // inner

  bool operator==(const TreeMorphism& o) const = default;
};

TreeMorphism validate_tree_morphism(Tree2 src, Tree2 dst, std::vector<int> f2,
                                    std::vector<int> f1);
TreeMorphism tree_identity(const Tree2& t);

// Throws Error("NotComposable") when shapes do not match.
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);
TreeMorphism tensor(const TreeMorphism& f, const TreeMorphism& g);
Tree2 tensor(const Tree2& a, const Tree2& b);

// Full inclusion of the simplex category: X -> (X -> [1]).
Tree2 s_functor(int n);
TreeMorphism s_morphism(const std::vector<int>& monotone, int m);  // S([n]) -> S([m])
// Multiplication S(X) (x) S(X) -> S(X) of the canonical monoid structure.
TreeMorphism s_multiplication(int n);

// Evaluation against a cosimplicial monoid: trees go to tensor products of
// components by fibre size, morphisms to tensor products of
// (iterated multiplication) . (cosimplicial images of fibre restrictions).
Mor eval(const TreeMorphism& f, const CosimpMonoid& m);
Obj eval_obj(const Tree2& t, const CosimpMonoid& m);

bool is_tip_bijective(const TreeMorphism& f);

// Tensor factors of a tip-bijective morphism along the target fibres, each a
// covering-shaped morphism onto a one-fibre tree. Requires the blocks to be
// contiguous; throws Error("NotTipBijective") / Error("NotFactorable").
std::vector<TreeMorphism> decompose_covering(const TreeMorphism& f);

// One step of a generator factorisation: a tensor word in identities (on
// whole subtrees), the plain merge and the swap-merge generator.
struct GenItem {
  enum Kind { Id, MergeId, MergeSwap } kind;
  Tree2 subtree;  // for Id items
};
struct GenLayer {
  std::vector<GenItem> items;
};

TreeMorphism merge_id_generator();    // ([2]->[2]) -> ([2]->[1]), tips id
TreeMorphism merge_swap_generator();  // same, tips (12)
TreeMorphism layer_morphism(const GenLayer& layer);

// Factors a tip-bijective morphism into generator layers whose composite is
// exactly f. Total on the monoidal closure of {identities, MergeId,
// MergeSwap}; morphisms outside that closure raise Error("NotFactorable")
// (e.g. merges of fibres with two or more tips, which no generator word can
// produce). Always recomposes and verifies before returning.
std::vector<GenLayer> factor_into_generators(const TreeMorphism& f);

// Exhaustive closure of the generator set under tensor and composition, up to
// the given tip count. Test oracle for factor_into_generators.
std::vector<TreeMorphism> generator_closure(int max_tips);

// All tip-bijective morphisms out of trees with `tips` tips (inner nodes of
// src/dst bounded by max_inner); enumeration for the acceptance suite.
std::vector<TreeMorphism> enumerate_tip_bijective(int tips, int max_inner);
std::vector<Tree2> enumerate_trees(int tips, int max_inner);

}  // namespace qc
