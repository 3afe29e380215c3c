#pragma once

#include "qc/error.hpp"
#include "qc/group.hpp"
#include "qc/matrix.hpp"

#include <string>
#include <vector>

namespace qc {

// Finite-dimensional associative unital algebra over Q by structure constants:
// e_i e_j = sum_k c[i][j][k] e_k. Tensor index convention everywhere: the
// basis vector e_i (x) e_j of A (x) B has index i*dim(B) + j.
struct AlgebraSC {
  std::string name;
  int dim = 0;
  std::vector<Rat> sc;  // flat [dim^3], sc[(i*dim+j)*dim+k]
  Vec unit;             // coefficients of 1

  const Rat& c(int i, int j, int k) const {
    return sc[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Rat& c(int i, int j, int k) { return sc[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  Vec mul(const Vec& x, const Vec& y) const;
  Mat mult_matrix() const;  // mu : A(x)A -> A, dim x dim^2
  bool is_commutative() const;
};

// Construction-time validation: associativity on basis triples + unit axiom.
AlgebraSC make_algebra(int dim, std::vector<Rat> sc, Vec unit, const std::string& name = "");

struct HopfSC : AlgebraSC {
  Mat coproduct;  // dim^2 x dim
  Vec counit;     // dim (row applied as counit(x) = sum_i counit[i] x_i)
  Mat antipode;       // dim x dim
  Mat antipode_inv;   // dim x dim
};

struct HopfReport {
  Verdict associativity, coassociativity, counit, antipode, antipode_invertible;
  Verdict coproduct_multiplicative, counit_multiplicative;
  bool all_ok() const {
    return associativity.ok && coassociativity.ok && counit.ok && antipode.ok &&
           antipode_invertible.ok && coproduct_multiplicative.ok && counit_multiplicative.ok;
  }
};

// Verdict per axiom; never throws.
HopfReport check_hopf(const HopfSC& h);

// k[G]: group-like basis, S(e_g) = e_{g^-1}.
HopfSC group_algebra(const FiniteGroup& g);
// Functions on G with pointwise product and convolution coproduct.
HopfSC dual_function_hopf(const FiniteGroup& g);

// k[S,alpha]: e_s e_t = alpha(s,t) e_{st}; unit e_identity (alpha normalised).
AlgebraSC skew_group_algebra(const TwoCocycleQ& alpha);

// k_chi[G] for a central extension, via the lexicographically least section of
// G -> G/A; returns the algebra together with the induced 2-cocycle on G/A.
std::pair<AlgebraSC, TwoCocycleQ> k_chi_span(const CentralExtension& ext);
// Same with an explicit section (one preimage per coset, coset of e first).
std::pair<AlgebraSC, TwoCocycleQ> k_chi_span_with_section(const CentralExtension& ext,
                                                          const std::vector<int>& section);

// A = k[S,alpha] as a right H-comodule algebra over H = k[S], psi(e_g) = e_g (x) e_g.
struct ComoduleAlgebra {
  AlgebraSC algebra;  // A
  HopfSC hopf;        // H
  Mat coaction;       // psi : A -> A (x) H, (dimA*dimH) x dimA
};

ComoduleAlgebra comodule_from_skew(const TwoCocycleQ& alpha);

// Coaction axioms: coassociativity, counit law, algebra-homomorphism property.
VerdictBundle check_comodule(const ComoduleAlgebra& c);

// Tensor product algebra A (x) B with componentwise product.
AlgebraSC tensor_algebra(const AlgebraSC& a, const AlgebraSC& b);

}  // namespace qc
