#include "qc/vines.hpp"

#include <algorithm>

namespace qc {

VinesMorphism validate_vines(int src, int dst, BraidWord braid, std::vector<int> delta) {
  if (braid.strands != src) throw Error("SizeMismatch", "braid strand count differs from src");
  for (int letter : braid.letters)
    if (letter == 0 || std::abs(letter) > src - 1)
      throw Error("WordOutOfRange", "braid letter outside 1..src-1");
  if (delta.size() != static_cast<size_t>(src))
    throw Error("SizeMismatch", "delta must be total on the source");
  for (size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] < 0 || delta[i] >= dst) throw Error("SizeMismatch", "delta value out of range");
    if (i + 1 < delta.size() && delta[i] > delta[i + 1])
      throw Error("NotMonotone", "delta must be order preserving");
  }
  return VinesMorphism{src, dst, std::move(braid), std::move(delta)};
}

VinesMorphism vines_identity(int n) {
  std::vector<int> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i;
  return VinesMorphism{n, n, BraidWord{n, {}}, std::move(d)};
}

std::vector<ElemFactor> elementary_factors(const std::vector<int>& delta, int dst) {
  // canonical dels-after-sigmas form, listed last-applied first:
  // [del_{v_r}, ..., del_{v_1}, sigma_{d_1}, ..., sigma_{d_k}]
  // where sigmas apply largest index first and dels ascend.
  const int n = static_cast<int>(delta.size());
  std::vector<ElemFactor> word;
  std::vector<int> missing;
  std::vector<bool> hit(static_cast<size_t>(dst), false);
  for (int v : delta) hit[static_cast<size_t>(v)] = true;
  for (int v = 0; v < dst; ++v)
    if (!hit[static_cast<size_t>(v)]) missing.push_back(v);
  for (auto it = missing.rbegin(); it != missing.rend(); ++it)
    word.push_back(ElemFactor{ElemFactor::Del, *it});
  std::vector<int> collapse;
  for (int i = 0; i + 1 < n; ++i)
    if (delta[static_cast<size_t>(i)] == delta[static_cast<size_t>(i) + 1]) collapse.push_back(i);
  for (int d : collapse) word.push_back(ElemFactor{ElemFactor::Sigma, d});
  return word;
}

std::vector<int> recompose_elementary(const std::vector<ElemFactor>& word, int src, int dst) {
  // apply factors first-applied first (reverse of the stored order)
  std::vector<int> map(static_cast<size_t>(src));
  for (int i = 0; i < src; ++i) map[static_cast<size_t>(i)] = i;
  int level = src;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (int& v : map) {
      if (it->kind == ElemFactor::Sigma)
        v = v <= it->index ? v : v - 1;
      else
        v = v < it->index ? v : v + 1;
    }
    level += it->kind == ElemFactor::Sigma ? -1 : 1;
  }
  if (level != dst) throw Error("SizeMismatch", "elementary word has wrong type");
  return map;
}

namespace {

// Push one braid letter (index, sign) through one elementary factor; the
// factor may change its index, the letter may duplicate, shift or vanish.
// Emitted letters are listed leftmost (last-applied) first.
struct PushResult {
  std::vector<std::pair<int, int>> out;  // (index, sign)
};

PushResult push_through(std::pair<int, int> letter, ElemFactor& factor) {
  const int i = letter.first, s = letter.second;
  if (factor.kind == ElemFactor::Sigma) {
    const int j = factor.index;
    if (i <= j - 1) return {{{i, s}}};
    if (i == j) {  // x_j sigma_j = sigma_{j-1} x_{j+1} x_j
      factor.index = j - 1;
      return {{{i + 1, s}, {i, s}}};
    }
    if (i == j + 1) {  // x_{j+1} sigma_j = sigma_{j+1} x_{j+1} x_{j+2}
      factor.index = j + 1;
      return {{{i, s}, {i + 1, s}}};
    }
    return {{{i + 1, s}}};
  }
  const int j = factor.index;
  if (i <= j - 1) return {{{i, s}}};
  if (i == j) {  // x_j del_j = del_{j-1}
    factor.index = j - 1;
    return {};
  }
  if (i == j + 1) {  // x_{j+1} del_j = del_{j+1}
    factor.index = j + 1;
    return {};
  }
  return {{{i - 1, s}}};
}

// Push a letter through the whole factor list starting at position `from`
// (factors stored last-applied first); returns the emitted word in
// first-applied-first order.
std::vector<int> push_letter(std::pair<int, int> letter, std::vector<ElemFactor>& factors,
                             size_t from) {
  if (from == factors.size()) {
    return {letter.second > 0 ? letter.first : -letter.first};
  }
  PushResult res = push_through(letter, factors[from]);
  std::vector<int> word;
  // res.out is leftmost-first; the rightmost is adjacent to the next factor,
  // so push it first and prepend successive results
  for (auto it = res.out.rbegin(); it != res.out.rend(); ++it) {
    std::vector<int> sub = push_letter(*it, factors, from + 1);
    word.insert(word.end(), sub.begin(), sub.end());
  }
  return word;
}

}  // namespace

VinesMorphism vines_compose(const VinesMorphism& g, const VinesMorphism& f) {
  if (f.dst != g.src) throw Error("SizeMismatch", "codomain/domain sizes differ");
  // composite = delta_g . (braid_g . delta_f) . braid_f
  std::vector<ElemFactor> factors = elementary_factors(f.delta, f.dst);
  std::vector<int> pushed;  // first-applied first
  for (int letter : g.braid.letters) {
    std::pair<int, int> l{std::abs(letter), letter > 0 ? 1 : -1};
    std::vector<int> word = push_letter(l, factors, 0);
    pushed.insert(pushed.end(), word.begin(), word.end());
  }
  std::vector<int> delta_f2 = recompose_elementary(factors, f.src, f.dst);
  std::vector<int> delta(static_cast<size_t>(f.src));
  for (int i = 0; i < f.src; ++i)
    delta[static_cast<size_t>(i)] = g.delta[static_cast<size_t>(delta_f2[static_cast<size_t>(i)])];
  BraidWord braid{f.src, f.braid.letters};
  braid.letters.insert(braid.letters.end(), pushed.begin(), pushed.end());
  return validate_vines(f.src, g.dst, std::move(braid), std::move(delta));
}

bool vines_equal(const VinesMorphism& a, const VinesMorphism& b) {
  if (a.src != b.src || a.dst != b.dst) throw Error("SizeMismatch", "shapes differ");
  if (a.delta != b.delta) return false;
  // braid_b^-1 braid_a stabilises the fibres of delta exactly when the two
  // underlying functions delta . perm(braid) agree pointwise
  std::vector<int> pa = braid_permutation(a.braid), pb = braid_permutation(b.braid);
  std::vector<int> painv(pa.size()), pbinv(pb.size());
  for (size_t i = 0; i < pa.size(); ++i) painv[static_cast<size_t>(pa[i])] = static_cast<int>(i);
  for (size_t i = 0; i < pb.size(); ++i) pbinv[static_cast<size_t>(pb[i])] = static_cast<int>(i);
  for (int x = 0; x < a.src; ++x)
    if (a.delta[static_cast<size_t>(painv[static_cast<size_t>(x)])] !=
        a.delta[static_cast<size_t>(pbinv[static_cast<size_t>(x)])])
      return false;
  return true;
}

}  // namespace qc
