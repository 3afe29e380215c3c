#pragma once

#include "qc/error.hpp"
#include "qc/yb.hpp"

#include <vector>

namespace qc {

// Normal form of a morphism in the braid-then-monotone presentation: the
// braid acts first, then the monotone map. delta entries are 0-indexed.
struct VinesMorphism {
  int src = 0, dst = 0;
  BraidWord braid;          // on src strands
  std::vector<int> delta;   // monotone [src] -> [dst]
};

VinesMorphism validate_vines(int src, int dst, BraidWord braid, std::vector<int> delta);
VinesMorphism vines_identity(int n);

// Composite in normal form: g's braid letters are pushed through f's monotone
// part one elementary factor at a time; letters duplicate at merges, vanish at
// unit insertions and shift otherwise.
VinesMorphism vines_compose(const VinesMorphism& g, const VinesMorphism& f);

// Equal deltas and the permutation of braid_b^-1 braid_a stabilises every
// fibre of delta (the symmetric quotient of the normal form).
bool vines_equal(const VinesMorphism& a, const VinesMorphism& b);

// Elementary factors of a monotone map: canonical dels-after-sigmas form.
struct ElemFactor {
  enum Kind { Sigma, Del } kind;
  int index;
};
std::vector<ElemFactor> elementary_factors(const std::vector<int>& delta, int dst);
std::vector<int> recompose_elementary(const std::vector<ElemFactor>& word, int src, int dst);

}  // namespace qc
