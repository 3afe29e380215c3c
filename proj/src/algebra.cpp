#include "qc/algebra.hpp"

#include <sstream>

namespace qc {

Vec AlgebraSC::mul(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y(j).is_zero()) continue;
      const Rat f = x(i) * y(j);
      for (int k = 0; k < dim; ++k)
        if (!c(i, j, k).is_zero()) out(k) += f * c(i, j, k);
    }
  }
  return out;
}

Mat AlgebraSC::mult_matrix() const {
  Mat m = Mat::Zero(dim, static_cast<Eigen::Index>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m(k, i * dim + j) = c(i, j, k);
  return m;
}

bool AlgebraSC::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

AlgebraSC make_algebra(int dim, std::vector<Rat> sc, Vec unit, const std::string& name) {
  if (sc.size() != static_cast<size_t>(dim) * dim * dim)
    throw Error("BadTable", "structure constant tensor has wrong size");
  AlgebraSC a;
  a.name = name;
  a.dim = dim;
  a.sc = std::move(sc);
  a.unit = std::move(unit);
  // associativity on basis triples
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Vec ei = Vec::Zero(dim), ej = Vec::Zero(dim), ek = Vec::Zero(dim);
        ei(i) = Rat(1);
        ej(j) = Rat(1);
        ek(k) = Rat(1);
        Vec lhs = a.mul(a.mul(ei, ej), ek);
        Vec rhs = a.mul(ei, a.mul(ej, ek));
        if (!mat_equal(lhs, rhs)) {
          std::ostringstream os;
          os << "basis triple (" << i << "," << j << "," << k << ")";
          throw Error("NotAssociative", os.str());
        }
      }
  for (int i = 0; i < dim; ++i) {
    Vec ei = Vec::Zero(dim);
    ei(i) = Rat(1);
    if (!mat_equal(a.mul(a.unit, ei), ei) || !mat_equal(a.mul(ei, a.unit), ei))
      throw Error("NotUnit", "unit axiom fails at basis element " + std::to_string(i));
  }
  return a;
}

namespace {

Vec basis_vec(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v(i) = Rat(1);
  return v;
}

// (Delta (x) I)Delta and (I (x) Delta)Delta as dim^3 x dim matrices.
Mat iterated_coproduct_left(const HopfSC& h) {
  const int d = h.dim;
  Mat id = Mat::Identity(d, d);
  return kron(h.coproduct, id) * h.coproduct;
}
Mat iterated_coproduct_right(const HopfSC& h) {
  const int d = h.dim;
  Mat id = Mat::Identity(d, d);
  return kron(id, h.coproduct) * h.coproduct;
}

}  // namespace

HopfReport check_hopf(const HopfSC& h) {
  HopfReport rep;
  const int d = h.dim;
  Mat id = Mat::Identity(d, d);
  Mat mu = h.mult_matrix();

  rep.associativity = Verdict::pass("associativity");
  try {
    make_algebra(d, h.sc, h.unit);
  } catch (const Error& e) {
    rep.associativity = Verdict::fail("associativity", e.what());
  }

  Mat left = iterated_coproduct_left(h), right = iterated_coproduct_right(h);
  rep.coassociativity = mat_equal(left, right)
                            ? Verdict::pass("coassociativity")
                            : Verdict::fail("coassociativity", "(D(x)I)D != (I(x)D)D");

  // (eps (x) I)Delta = I = (I (x) eps)Delta
  Mat epsI = Mat::Zero(d, static_cast<Eigen::Index>(d) * d);
  Mat Ieps = Mat::Zero(d, static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      epsI(j, i * d + j) = h.counit(i);
      Ieps(i, i * d + j) = h.counit(j);
    }
  bool cu = mat_equal(epsI * h.coproduct, id) && mat_equal(Ieps * h.coproduct, id);
  rep.counit = cu ? Verdict::pass("counit") : Verdict::fail("counit", "counit law fails");

  // mu(S (x) I)Delta = iota eps = mu(I (x) S)Delta
  Mat iota_eps = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) iota_eps(i, j) = h.unit(i) * h.counit(j);
  Mat lhs1 = mu * kron(h.antipode, id) * h.coproduct;
  Mat lhs2 = mu * kron(id, h.antipode) * h.coproduct;
  bool anti = mat_equal(lhs1, iota_eps) && mat_equal(lhs2, iota_eps);
  rep.antipode = anti ? Verdict::pass("antipode") : Verdict::fail("antipode", "S is not an antipode");

  rep.antipode_invertible = mat_is_identity(h.antipode * h.antipode_inv)
                                ? Verdict::pass("antipode_invertible")
                                : Verdict::fail("antipode_invertible", "S*Sinv != I");

  // Delta and eps must be algebra maps for the cosimplicial constructions.
  bool dm = true;
  for (int i = 0; i < d && dm; ++i)
    for (int j = 0; j < d && dm; ++j) {
      Vec prod = h.mul(basis_vec(d, i), basis_vec(d, j));
      Vec lhs = h.coproduct * prod;
      // Delta(e_i)Delta(e_j) in the tensor algebra
      Vec di = h.coproduct * basis_vec(d, i);
      Vec dj = h.coproduct * basis_vec(d, j);
      Vec rhs = Vec::Zero(static_cast<Eigen::Index>(d) * d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Rat f = di(a * d + b);
          if (f.is_zero()) continue;
          for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
              const Rat g = dj(x * d + y);
              if (g.is_zero()) continue;
              for (int p = 0; p < d; ++p) {
                if (h.c(a, x, p).is_zero()) continue;
                for (int q = 0; q < d; ++q)
                  if (!h.c(b, y, q).is_zero())
                    rhs(p * d + q) += f * g * h.c(a, x, p) * h.c(b, y, q);
              }
            }
        }
      dm = mat_equal(lhs, rhs);
    }
  {
    Vec du = h.coproduct * h.unit;
    Vec uu = Vec::Zero(static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) uu(i * d + j) = h.unit(i) * h.unit(j);
    dm = dm && mat_equal(du, uu);
  }
  rep.coproduct_multiplicative = dm ? Verdict::pass("coproduct_multiplicative")
                                    : Verdict::fail("coproduct_multiplicative",
                                                    "Delta is not an algebra map");

  bool em = true;
  for (int i = 0; i < d && em; ++i)
    for (int j = 0; j < d && em; ++j) {
      Vec prod = h.mul(basis_vec(d, i), basis_vec(d, j));
      Rat lhs(0);
      for (int k = 0; k < d; ++k) lhs += h.counit(k) * prod(k);
      em = lhs == h.counit(i) * h.counit(j);
    }
  {
    Rat eu(0);
    for (int k = 0; k < d; ++k) eu += h.counit(k) * h.unit(k);
    em = em && eu == Rat(1);
  }
  rep.counit_multiplicative =
      em ? Verdict::pass("counit_multiplicative")
         : Verdict::fail("counit_multiplicative", "eps is not an algebra map");
  return rep;
}

HopfSC group_algebra(const FiniteGroup& g) {
  const int d = g.n;
  HopfSC h;
  h.name = "k[" + g.name + "]";
  h.dim = d;
  h.sc.assign(static_cast<size_t>(d) * d * d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h.c(i, j, g.op(i, j)) = Rat(1);
  h.unit = basis_vec(d, g.identity);
  h.coproduct = Mat::Zero(static_cast<Eigen::Index>(d) * d, d);
  for (int i = 0; i < d; ++i) h.coproduct(i * d + i, i) = Rat(1);
  h.counit = Vec::Zero(d);
  for (int i = 0; i < d; ++i) h.counit(i) = Rat(1);
  std::vector<int> invp(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) invp[static_cast<size_t>(i)] = g.invert(i);
  h.antipode = permutation_matrix(invp);
  h.antipode_inv = h.antipode;  // inversion is an involution as a permutation
  return h;
}

HopfSC dual_function_hopf(const FiniteGroup& g) {
  const int d = g.n;
  HopfSC h;
  h.name = "Fun(" + g.name + ")";
  h.dim = d;
  h.sc.assign(static_cast<size_t>(d) * d * d, Rat(0));
  for (int i = 0; i < d; ++i) h.c(i, i, i) = Rat(1);  // pointwise product
  h.unit = Vec::Zero(d);
  for (int i = 0; i < d; ++i) h.unit(i) = Rat(1);
  h.coproduct = Mat::Zero(static_cast<Eigen::Index>(d) * d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) h.coproduct(a * d + b, g.op(a, b)) = Rat(1);
  h.counit = Vec::Zero(d);
  h.counit(g.identity) = Rat(1);
  std::vector<int> invp(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) invp[static_cast<size_t>(i)] = g.invert(i);
  h.antipode = permutation_matrix(invp);
  h.antipode_inv = h.antipode;
  return h;
}

AlgebraSC skew_group_algebra(const TwoCocycleQ& alpha) {
  const FiniteGroup& s = alpha.group;
  const int d = s.n;
  std::vector<Rat> sc(static_cast<size_t>(d) * d * d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      sc[(static_cast<size_t>(i) * d + j) * d + s.op(i, j)] = alpha.at(i, j);
  return make_algebra(d, std::move(sc), basis_vec(d, s.identity), "k[" + s.name + ",alpha]");
}

std::pair<AlgebraSC, TwoCocycleQ> k_chi_span_with_section(const CentralExtension& ext,
                                                          const std::vector<int>& section) {
  const FiniteGroup& g = ext.total;
  // cosets of A, ordered by least element; identity coset first
  std::vector<int> coset_of(static_cast<size_t>(g.n), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> cs;
    for (int a : ext.center_sub) cs.push_back(g.op(a, x));
    std::sort(cs.begin(), cs.end());
    for (int y : cs) coset_of[static_cast<size_t>(y)] = static_cast<int>(cosets.size());
    cosets.push_back(cs);
  }
  const int q = static_cast<int>(cosets.size());
  if (static_cast<int>(section.size()) != q)
    throw Error("NonCentral", "section must pick one preimage per coset");
  for (int i = 0; i < q; ++i)
    if (coset_of[static_cast<size_t>(section[static_cast<size_t>(i)])] != i)
      throw Error("NonCentral", "section element lies in the wrong coset");
  // quotient group table
  std::vector<int> qt(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      qt[static_cast<size_t>(i) * q + j] = coset_of[static_cast<size_t>(
          g.op(section[static_cast<size_t>(i)], section[static_cast<size_t>(j)]))];
  FiniteGroup quo = validate_group(qt, 0, g.name + "/A");
  // gamma(x,y) = s(x)s(y)s(xy)^-1 in A; alpha = chi(gamma)
  std::vector<Rat> alpha(static_cast<size_t>(q) * q, Rat(1));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int prod = g.op(section[static_cast<size_t>(i)], section[static_cast<size_t>(j)]);
      int rep = section[static_cast<size_t>(quo.op(i, j))];
      int gamma = g.op(prod, g.invert(rep));
      alpha[static_cast<size_t>(i) * q + j] = ext.chi_of(gamma);
    }
  TwoCocycleQ cocycle = check_two_cocycle(alpha, quo);
  AlgebraSC algebra = skew_group_algebra(cocycle);
  algebra.name = "k_chi[" + g.name + "]";
  return {std::move(algebra), std::move(cocycle)};
}

std::pair<AlgebraSC, TwoCocycleQ> k_chi_span(const CentralExtension& ext) {
  const FiniteGroup& g = ext.total;
  std::vector<int> coset_of(static_cast<size_t>(g.n), -1);
  std::vector<int> section;
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> cs;
    for (int a : ext.center_sub) cs.push_back(g.op(a, x));
    int least = *std::min_element(cs.begin(), cs.end());
    for (int y : cs) coset_of[static_cast<size_t>(y)] = static_cast<int>(section.size());
    section.push_back(least);
  }
  return k_chi_span_with_section(ext, section);
}

ComoduleAlgebra comodule_from_skew(const TwoCocycleQ& alpha) {
  ComoduleAlgebra c;
  c.algebra = skew_group_algebra(alpha);
  c.hopf = group_algebra(alpha.group);
  const int da = c.algebra.dim, dh = c.hopf.dim;
  c.coaction = Mat::Zero(static_cast<Eigen::Index>(da) * dh, da);
  for (int gidx = 0; gidx < da; ++gidx) c.coaction(gidx * dh + gidx, gidx) = Rat(1);
  auto verdicts = check_comodule(c);
  if (!verdicts.all_ok())
    throw Error("InvalidAction", "coaction axioms fail: " + verdicts.first_failure()->relation);
  return c;
}

VerdictBundle check_comodule(const ComoduleAlgebra& c) {
  VerdictBundle out;
  const int da = c.algebra.dim, dh = c.hopf.dim;
  Mat ida = Mat::Identity(da, da), idh = Mat::Identity(dh, dh);
  // (psi (x) I_H) psi = (I_A (x) Delta) psi
  Mat lhs = kron(c.coaction, idh) * c.coaction;
  Mat rhs = kron(ida, c.hopf.coproduct) * c.coaction;
  out.add(mat_equal(lhs, rhs) ? Verdict::pass("coaction_coassociative")
                              : Verdict::fail("coaction_coassociative", "(psi(x)I)psi != (I(x)D)psi"));
  // (I_A (x) eps) psi = I_A
  Mat ieps = Mat::Zero(da, static_cast<Eigen::Index>(da) * dh);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < dh; ++j) ieps(i, i * dh + j) = c.hopf.counit(j);
  out.add(mat_equal(ieps * c.coaction, ida)
              ? Verdict::pass("coaction_counit")
              : Verdict::fail("coaction_counit", "(I(x)eps)psi != I"));
  // psi is an algebra homomorphism into A (x) H
  AlgebraSC ah = tensor_algebra(c.algebra, c.hopf);
  bool hom = mat_equal(c.coaction * c.algebra.unit, ah.unit);
  for (int i = 0; i < da && hom; ++i)
    for (int j = 0; j < da && hom; ++j) {
      Vec ei = Vec::Zero(da), ej = Vec::Zero(da);
      ei(i) = Rat(1);
      ej(j) = Rat(1);
      Vec lhsv = c.coaction * c.algebra.mul(ei, ej);
      Vec rhsv = ah.mul(c.coaction * ei, c.coaction * ej);
      hom = mat_equal(lhsv, rhsv);
    }
  out.add(hom ? Verdict::pass("coaction_multiplicative")
              : Verdict::fail("coaction_multiplicative", "psi is not an algebra map"));
  return out;
}

AlgebraSC tensor_algebra(const AlgebraSC& a, const AlgebraSC& b) {
  const int da = a.dim, db = b.dim, d = da * db;
  AlgebraSC t;
  t.name = a.name + "(x)" + b.name;
  t.dim = d;
  t.sc.assign(static_cast<size_t>(d) * d * d, Rat(0));
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < db; ++j1)
      for (int i2 = 0; i2 < da; ++i2)
        for (int j2 = 0; j2 < db; ++j2)
          for (int k1 = 0; k1 < da; ++k1) {
            if (a.c(i1, i2, k1).is_zero()) continue;
            for (int k2 = 0; k2 < db; ++k2)
              if (!b.c(j1, j2, k2).is_zero())
                t.c(i1 * db + j1, i2 * db + j2, k1 * db + k2) =
                    a.c(i1, i2, k1) * b.c(j1, j2, k2);
          }
  t.unit = Vec::Zero(d);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) t.unit(i * db + j) = a.unit(i) * b.unit(j);
  return t;
}

}  // namespace qc
