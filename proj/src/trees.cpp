#include "qc/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qc {

std::vector<std::vector<int>> Tree2::fibres() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(inner));
  for (int tip = 0; tip < tips; ++tip) out[static_cast<size_t>(t[static_cast<size_t>(tip)])].push_back(tip);
  return out;
}

Tree2 validate_tree(int tips, int inner, std::vector<int> t) {
  if (tips < 0 || inner < 0 || t.size() != static_cast<size_t>(tips))
    throw Error("BadTable", "tree table has wrong size");
  for (int v : t)
    if (v < 0 || v >= inner) throw Error("BadTable", "tree fibre index out of range");
  return Tree2{tips, inner, std::move(t)};
}

TreeMorphism validate_tree_morphism(Tree2 src, Tree2 dst, std::vector<int> f2,
                                    std::vector<int> f1) {
  if (f2.size() != static_cast<size_t>(src.tips) || f1.size() != static_cast<size_t>(src.inner))
    throw Error("BadTable", "morphism tables have wrong sizes");
  for (int v : f2)
    if (v < 0 || v >= dst.tips) throw Error("BadTable", "f2 value out of range");
  for (size_t i = 0; i < f1.size(); ++i) {
    if (f1[i] < 0 || f1[i] >= dst.inner) throw Error("BadTable", "f1 value out of range");
    if (i + 1 < f1.size() && f1[i] > f1[i + 1])
      throw Error("NotMonotone", "f1 must be order preserving");
  }
  for (int tip = 0; tip < src.tips; ++tip)
    if (dst.t[static_cast<size_t>(f2[static_cast<size_t>(tip)])] !=
        f1[static_cast<size_t>(src.t[static_cast<size_t>(tip)])])
      throw Error("BadTable", "square does not commute at tip " + std::to_string(tip));
  // order preserving on fibres, weakly: the multiplication morphisms collapse
  // tips inside a fibre
  for (const auto& fibre : src.fibres())
    for (size_t i = 0; i + 1 < fibre.size(); ++i)
      if (f2[static_cast<size_t>(fibre[i])] > f2[static_cast<size_t>(fibre[i + 1])])
        throw Error("NotMonotone", "f2 must be order preserving on each fibre");
  return TreeMorphism{std::move(src), std::move(dst), std::move(f2), std::move(f1)};
}

TreeMorphism tree_identity(const Tree2& t) {
  std::vector<int> f2(static_cast<size_t>(t.tips)), f1(static_cast<size_t>(t.inner));
  for (int i = 0; i < t.tips; ++i) f2[static_cast<size_t>(i)] = i;
  for (int i = 0; i < t.inner; ++i) f1[static_cast<size_t>(i)] = i;
  return TreeMorphism{t, t, std::move(f2), std::move(f1)};
}

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f) {
  if (!(f.dst == g.src)) throw Error("NotComposable", "codomain/domain trees differ");
  std::vector<int> f2(f.f2.size()), f1(f.f1.size());
  for (size_t i = 0; i < f.f2.size(); ++i) f2[i] = g.f2[static_cast<size_t>(f.f2[i])];
  for (size_t i = 0; i < f.f1.size(); ++i) f1[i] = g.f1[static_cast<size_t>(f.f1[i])];
  return validate_tree_morphism(f.src, g.dst, std::move(f2), std::move(f1));
}

Tree2 tensor(const Tree2& a, const Tree2& b) {
  Tree2 out{a.tips + b.tips, a.inner + b.inner, a.t};
  for (int v : b.t) out.t.push_back(v + a.inner);
  return out;
}

TreeMorphism tensor(const TreeMorphism& f, const TreeMorphism& g) {
  Tree2 src = tensor(f.src, g.src), dst = tensor(f.dst, g.dst);
  std::vector<int> f2 = f.f2, f1 = f.f1;
  for (int v : g.f2) f2.push_back(v + f.dst.tips);
  for (int v : g.f1) f1.push_back(v + f.dst.inner);
  return validate_tree_morphism(std::move(src), std::move(dst), std::move(f2), std::move(f1));
}

Tree2 s_functor(int n) {
  return validate_tree(n, 1, std::vector<int>(static_cast<size_t>(n), 0));
}

TreeMorphism s_morphism(const std::vector<int>& monotone, int m) {
  for (size_t i = 0; i + 1 < monotone.size(); ++i)
    if (monotone[i] > monotone[i + 1]) throw Error("NotMonotone", "map is not order preserving");
  for (int v : monotone)
    if (v < 0 || v >= m) throw Error("NotMonotone", "value out of range");
  // S(f) acts on tips by f itself, over the identity on the single inner node
  return validate_tree_morphism(s_functor(static_cast<int>(monotone.size())), s_functor(m),
                                monotone, {0});
}

TreeMorphism s_multiplication(int n) {
  Tree2 src = tensor(s_functor(n), s_functor(n));
  std::vector<int> f2(static_cast<size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) f2[static_cast<size_t>(i)] = i % n;
  return validate_tree_morphism(src, s_functor(n), std::move(f2), {0, 0});
}

Obj eval_obj(const Tree2& t, const CosimpMonoid& m) {
  Obj acc = unit_obj(m.kind());
  for (const auto& fibre : t.fibres())
    acc = tensor_obj(acc, m.component(static_cast<int>(fibre.size())).carrier);
  return acc;
}

Mor eval(const TreeMorphism& f, const CosimpMonoid& m) {
  // per dst inner node j: mult over g^-1(j) of the cosimplicial images of the
  // fibre restrictions of f2
  auto src_fibres = f.src.fibres();
  auto dst_fibres = f.dst.fibres();
  Mor acc = Mor::identity(unit_obj(m.kind()));
  for (int j = 0; j < f.dst.inner; ++j) {
    const auto& target = dst_fibres[static_cast<size_t>(j)];
    const int dst_size = static_cast<int>(target.size());
    // rank of each dst tip within its fibre
    std::map<int, int> rank;
    for (size_t r = 0; r < target.size(); ++r) rank[target[r]] = static_cast<int>(r);
    MonoidObject comp = m.component(dst_size);
    // fold the fibre images pairwise through mu to keep intermediates small
    std::optional<Mor> block;
    for (int i = 0; i < f.src.inner; ++i) {
      if (f.f1[static_cast<size_t>(i)] != j) continue;
      const auto& fib = src_fibres[static_cast<size_t>(i)];
      std::vector<int> restriction;
      restriction.reserve(fib.size());
      for (int tip : fib) restriction.push_back(rank.at(f.f2[static_cast<size_t>(tip)]));
      Mor image = m.act(restriction, static_cast<int>(fib.size()), dst_size);
      block = block ? comp.mul.compose(block->tensor(image)) : image;
    }
    acc = acc.tensor(block ? *block : comp.unit);
  }
  return acc;
}

bool is_tip_bijective(const TreeMorphism& f) {
  if (f.src.tips != f.dst.tips) return false;
  std::vector<bool> seen(static_cast<size_t>(f.dst.tips), false);
  for (int v : f.f2) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

std::vector<TreeMorphism> decompose_covering(const TreeMorphism& f) {
  if (!is_tip_bijective(f)) throw Error("NotTipBijective", "tips must map bijectively");
  auto src_fibres = f.src.fibres();
  auto dst_fibres = f.dst.fibres();
  std::vector<TreeMorphism> out;
  int tip_base = 0, inner_base = 0;
  for (int j = 0; j < f.dst.inner; ++j) {
    // source inner nodes over j must be a contiguous run starting at inner_base
    std::vector<int> inner_nodes;
    for (int i = 0; i < f.src.inner; ++i)
      if (f.f1[static_cast<size_t>(i)] == j) inner_nodes.push_back(i);
    for (size_t p = 0; p < inner_nodes.size(); ++p)
      if (inner_nodes[p] != inner_base + static_cast<int>(p))
        throw Error("NotFactorable", "source fibres of target node are not contiguous");
    // their tips must be the contiguous block [tip_base, tip_base + k)
    std::vector<int> tips;
    for (int i : inner_nodes)
      for (int tip : src_fibres[static_cast<size_t>(i)]) tips.push_back(tip);
    std::sort(tips.begin(), tips.end());
    for (size_t p = 0; p < tips.size(); ++p)
      if (tips[p] != tip_base + static_cast<int>(p))
        throw Error("NotFactorable", "source tips of target node are not contiguous");
    // dst tips of fibre j must also be contiguous and aligned
    const auto& dtips = dst_fibres[static_cast<size_t>(j)];
    for (size_t p = 0; p < dtips.size(); ++p)
      if (dtips[p] != tip_base + static_cast<int>(p))
        throw Error("NotFactorable", "target tips are not contiguous");
    // build the factor: sub-src tree over inner_nodes, dst = one fibre
    const int k = static_cast<int>(tips.size());
    std::vector<int> sub_t(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p)
      sub_t[static_cast<size_t>(p)] =
          f.src.t[static_cast<size_t>(tip_base + p)] - inner_base;
    Tree2 sub_src = validate_tree(k, static_cast<int>(inner_nodes.size()), std::move(sub_t));
    Tree2 sub_dst = s_functor(k);
    std::vector<int> sub_f2(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p)
      sub_f2[static_cast<size_t>(p)] = f.f2[static_cast<size_t>(tip_base + p)] - tip_base;
    std::vector<int> sub_f1(inner_nodes.size(), 0);
    out.push_back(validate_tree_morphism(std::move(sub_src), std::move(sub_dst),
                                         std::move(sub_f2), std::move(sub_f1)));
    tip_base += k;
    inner_base += static_cast<int>(inner_nodes.size());
  }
  return out;
}

TreeMorphism merge_id_generator() {
  Tree2 src = validate_tree(2, 2, {0, 1});
  Tree2 dst = s_functor(2);
  return validate_tree_morphism(src, dst, {0, 1}, {0, 0});
}

TreeMorphism merge_swap_generator() {
  Tree2 src = validate_tree(2, 2, {0, 1});
  Tree2 dst = s_functor(2);
  return validate_tree_morphism(src, dst, {1, 0}, {0, 0});
}

TreeMorphism layer_morphism(const GenLayer& layer) {
  if (layer.items.empty()) {
    Tree2 empty = validate_tree(0, 0, {});
    return tree_identity(empty);
  }
  TreeMorphism acc = [&] {
    const GenItem& it = layer.items[0];
    if (it.kind == GenItem::Id) return tree_identity(it.subtree);
    return it.kind == GenItem::MergeId ? merge_id_generator() : merge_swap_generator();
  }();
  for (size_t i = 1; i < layer.items.size(); ++i) {
    const GenItem& it = layer.items[i];
    TreeMorphism next = it.kind == GenItem::Id
                            ? tree_identity(it.subtree)
                            : (it.kind == GenItem::MergeId ? merge_id_generator()
                                                           : merge_swap_generator());
    acc = tensor(acc, next);
  }
  return acc;
}

std::vector<GenLayer> factor_into_generators(const TreeMorphism& f) {
  if (!is_tip_bijective(f)) throw Error("NotTipBijective", "tips must map bijectively");
  auto src_fibres = f.src.fibres();
  GenLayer layer;
  // walk source inner nodes left to right, grouping by target fibre
  int i = 0;
  std::vector<int> pending_tree_tips;  // tips of the current identity item
  std::vector<int> pending_inner;      // inner nodes of the current identity item
  auto flush_identity = [&]() {
    if (pending_inner.empty()) return;
    // subtree over the pending inner nodes; tips must be contiguous
    std::vector<int> tips = pending_tree_tips;
    std::sort(tips.begin(), tips.end());
    for (size_t p = 0; p + 1 < tips.size(); ++p)
      if (tips[p] + 1 != tips[p + 1])
        throw Error("NotFactorable", "identity block has interleaved tips");
    std::vector<int> sub_t;
    sub_t.reserve(tips.size());
    for (int tip : tips)
      sub_t.push_back(f.src.t[static_cast<size_t>(tip)] - pending_inner.front());
    Tree2 sub = validate_tree(static_cast<int>(tips.size()),
                              static_cast<int>(pending_inner.size()), std::move(sub_t));
    layer.items.push_back(GenItem{GenItem::Id, std::move(sub)});
    pending_tree_tips.clear();
    pending_inner.clear();
  };
  while (i < f.src.inner) {
    const int j = f.f1[static_cast<size_t>(i)];
    // all source fibres mapping to j
    int hi = i;
    while (hi + 1 < f.src.inner && f.f1[static_cast<size_t>(hi + 1)] == j) ++hi;
    const int count = hi - i + 1;
    bool merged_pair = false;
    if (count == 2) {
      const auto &fa = src_fibres[static_cast<size_t>(i)], &fb = src_fibres[static_cast<size_t>(hi)];
      if (fa.size() == 1 && fb.size() == 1 && fb[0] == fa[0] + 1) merged_pair = true;
    }
    if (count == 1 && !merged_pair) {
      // carried fibre: tips must be fixed pointwise by f2
      for (int tip : src_fibres[static_cast<size_t>(i)]) {
        if (f.f2[static_cast<size_t>(tip)] != tip)
          throw Error("NotFactorable", "carried fibre moves tips");
        pending_tree_tips.push_back(tip);
      }
      pending_inner.push_back(i);
      i = hi + 1;
      continue;
    }
    if (!merged_pair)
      throw Error("NotFactorable",
                  "target fibre merges more than two source fibres or non-singleton fibres");
    const int ta = src_fibres[static_cast<size_t>(i)][0];
    const int tb = src_fibres[static_cast<size_t>(hi)][0];
    const bool swapped = f.f2[static_cast<size_t>(ta)] == tb && f.f2[static_cast<size_t>(tb)] == ta;
    const bool straight = f.f2[static_cast<size_t>(ta)] == ta && f.f2[static_cast<size_t>(tb)] == tb;
    if (!swapped && !straight) throw Error("NotFactorable", "merge pair tips move elsewhere");
    flush_identity();
    layer.items.push_back(GenItem{swapped ? GenItem::MergeSwap : GenItem::MergeId, {}});
    i = hi + 1;
  }
  flush_identity();
  std::vector<GenLayer> out{layer};
  // recomposition check is part of the contract
  TreeMorphism recomposed = layer_morphism(layer);
  for (size_t l = 1; l < out.size(); ++l) recomposed = compose(layer_morphism(out[l]), recomposed);
  if (!(recomposed == f)) throw Error("NotFactorable", "recomposition mismatch");
  return out;
}

std::vector<Tree2> enumerate_trees(int tips, int max_inner) {
  std::vector<Tree2> out;
  for (int inner = (tips == 0 ? 0 : 1); inner <= max_inner; ++inner) {
    if (tips == 0) {
      out.push_back(validate_tree(0, inner, {}));
      continue;
    }
    std::vector<int> t(static_cast<size_t>(tips), 0);
    while (true) {
      out.push_back(validate_tree(tips, inner, t));
      int pos = tips - 1;
      while (pos >= 0 && t[static_cast<size_t>(pos)] == inner - 1) {
        t[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++t[static_cast<size_t>(pos)];
    }
  }
  return out;
}

std::vector<TreeMorphism> enumerate_tip_bijective(int tips, int max_inner) {
  std::vector<TreeMorphism> out;
  auto trees = enumerate_trees(tips, max_inner);
  std::vector<int> perm(static_cast<size_t>(tips));
  for (auto& src : trees) {
    for (int i = 0; i < tips; ++i) perm[static_cast<size_t>(i)] = i;
    // all bijections f2, all monotone f1, dst determined by s = f1.t.f2^-1
    do {
      for (int k = 1; k <= max_inner; ++k) {
        std::vector<int> f1(static_cast<size_t>(src.inner), 0);
        while (true) {
          bool monotone = true;
          for (size_t p = 0; p + 1 < f1.size(); ++p)
            if (f1[p] > f1[p + 1]) monotone = false;
          if (monotone) {
            std::vector<int> s(static_cast<size_t>(tips));
            for (int tip = 0; tip < tips; ++tip)
              s[static_cast<size_t>(perm[static_cast<size_t>(tip)])] =
                  f1[static_cast<size_t>(src.t[static_cast<size_t>(tip)])];
            try {
              Tree2 dst = validate_tree(tips, k, s);
              out.push_back(validate_tree_morphism(src, dst, perm, f1));
            } catch (const Error&) {
              // fibrewise monotonicity can fail; skip
            }
          }
          int pos = src.inner - 1;
          while (pos >= 0 && f1[static_cast<size_t>(pos)] == k - 1) {
            f1[static_cast<size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++f1[static_cast<size_t>(pos)];
        }
        if (src.inner == 0) break;  // single empty f1
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

namespace {

struct MorKey {
  Tree2 src, dst;
  std::vector<int> f2, f1;
  bool operator<(const MorKey& o) const {
    auto tup = [](const MorKey& k) {
      return std::tie(k.src.tips, k.src.inner, k.src.t, k.dst.tips, k.dst.inner, k.dst.t, k.f2,
                      k.f1);
    };
    return tup(*this) < tup(o);
  }
};

MorKey key_of(const TreeMorphism& m) { return {m.src, m.dst, m.f2, m.f1}; }

}  // namespace

std::vector<TreeMorphism> generator_closure(int max_tips) {
  std::set<MorKey> seen;
  std::vector<TreeMorphism> all;
  auto push = [&](const TreeMorphism& m) -> bool {
    if (m.src.tips > max_tips || m.src.inner > max_tips || m.dst.inner > max_tips) return false;
    if (!seen.insert(key_of(m)).second) return false;
    all.push_back(m);
    return true;
  };
  for (int tips = 0; tips <= max_tips; ++tips)
    for (auto& t : enumerate_trees(tips, max_tips)) push(tree_identity(t));
  push(merge_id_generator());
  push(merge_swap_generator());
  // worklist closure under tensor and composition
  size_t done = 0;
  while (done < all.size()) {
    const TreeMorphism m = all[done++];
    const size_t count = all.size();
    for (size_t j = 0; j < count; ++j) {
      if (m.src.tips + all[j].src.tips <= max_tips &&
          m.src.inner + all[j].src.inner <= max_tips &&
          m.dst.inner + all[j].dst.inner <= max_tips) {
        push(tensor(m, all[j]));
        push(tensor(all[j], m));
      }
      if (all[j].dst == m.src) push(compose(m, all[j]));
      if (m.dst == all[j].src) push(compose(all[j], m));
    }
  }
  return all;
}

}  // namespace qc
