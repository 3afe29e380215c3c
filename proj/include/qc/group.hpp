#pragma once

#include "qc/error.hpp"
#include "qc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qc {

// Finite monoid on dense element indices 0..n-1. Constructions always put the
// identity at index 0; validation accepts any identity index.
struct FiniteMonoid {
  std::string name;
  int n = 0;
  std::vector<int> table;  // row-major: op(a,b) = table[a*n+b]
  int identity = 0;

  int op(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  bool is_commutative() const;
};

struct FiniteGroup : FiniteMonoid {
  std::vector<int> inv;

  int invert(int a) const { return inv[static_cast<size_t>(a)]; }
  int conj(int x, int y) const { return op(op(invert(y), x), y); }  // y^-1 x y
  int order_of(int a) const;
  bool is_abelian() const { return is_commutative(); }
};

struct MonoidIssue {
  enum Kind { BadShape, BadEntry, NotUnit, NotAssociative, NoInverse } kind;
  int x = -1, y = -1, z = -1;
  std::string describe() const;
};

std::vector<MonoidIssue> monoid_violations(const std::vector<int>& table, int identity);

// Throws Error("NotAssociative"/"NotUnit", ...) carrying the first violation.
FiniteMonoid validate_monoid(const std::vector<int>& table, int identity,
                             const std::string& name = "");
// Additionally requires two-sided inverses; fills the inverse table.
FiniteGroup validate_group(const std::vector<int>& table, int identity,
                           const std::string& name = "");
std::optional<FiniteGroup> try_group(const FiniteMonoid& m);

// Right action of G on K by group automorphisms: act(k, g) = k^g.
struct RightAction {
  FiniteGroup actor;    // G
  FiniteGroup carrier;  // K
  std::vector<int> act;  // act[k*|G|+g] = k^g

  int apply(int k, int g) const { return act[static_cast<size_t>(k) * actor.n + g]; }
};

std::vector<MonoidIssue> action_violations(const RightAction& a);
RightAction validate_action(FiniteGroup g, FiniteGroup k, std::vector<int> act);
RightAction trivial_action(const FiniteGroup& g, const FiniteGroup& k);

// phi : G -> K with phi(fg) = phi(f)^g phi(g).
struct OneCocycle {
  RightAction action;
  std::vector<int> table;  // phi[g] in K
  bool bijective = false;

  int phi(int g) const { return table[static_cast<size_t>(g)]; }
  std::vector<int> phi_inverse() const;  // requires bijective
};

// Throws Error("CocycleViolation", ...) naming the first failing pair.
OneCocycle check_one_cocycle(const std::vector<int>& phi, const RightAction& act);

// Normalised 2-cocycle on S with values in Q*: alpha(s,t)alpha(st,u) = alpha(t,u)alpha(s,tu).
struct TwoCocycleQ {
  FiniteGroup group;
  std::vector<Rat> alpha;  // row-major over S x S

  const Rat& at(int s, int t) const { return alpha[static_cast<size_t>(s) * group.n + t]; }
};

// Normalises by the constant coboundary (divide by alpha(e,e)), then verifies
// the cocycle law; throws Error("CocycleViolation", ...) on the first bad triple.
TwoCocycleQ check_two_cocycle(const std::vector<Rat>& alpha, const FiniteGroup& s);
TwoCocycleQ constant_two_cocycle(const FiniteGroup& s);  // alpha == 1
// Signs of the quaternion basis {1,i,j,k} pushed down to the Klein four-group.
TwoCocycleQ quaternion_cocycle();

// Central extension data: A central in G, chi : A -> Q* multiplicative.
struct CentralExtension {
  FiniteGroup total;             // G
  std::vector<int> center_sub;   // sorted element indices of A
  std::vector<Rat> chi;          // indexed like center_sub

  const Rat& chi_of(int a_element) const;  // a_element is an index into G
};

CentralExtension validate_central_extension(FiniteGroup g, std::vector<int> a,
                                            std::vector<Rat> chi);

// (f,u)(g,v) = (fg, u^g v) on pairs encoded f*|K|+u. Throws Error("InvalidAction").
FiniteGroup semidirect_product(const FiniteGroup& g, const RightAction& act);

// All bijective 1-cocycles for the action, lexicographically sorted by table.
// DFS over generator images with propagation along the Cayley graph.
// Throws Error("SizeMismatch") when |G| != |K|.
std::vector<OneCocycle> enumerate_bijective_cocycles(const RightAction& act);

// All right actions of G on K by automorphisms (i.e. homs G -> Aut(K)^op),
// in a deterministic order starting with the trivial action.
std::vector<RightAction> enumerate_actions(const FiniteGroup& g, const FiniteGroup& k);

// Automorphisms of K as permutation tables, lexicographically sorted.
std::vector<std::vector<int>> automorphism_group(const FiniteGroup& k);

// True iff every commutator [x,y] lies in A, i.e. G/A is abelian.
bool near_commutative_extension_test(const CentralExtension& ext);

// All groups of the given order up to isomorphism, stable names and tables.
// Throws Error("OrderOutOfRange") outside 1..12.
std::vector<FiniteGroup> catalog(int order);
FiniteGroup catalog_by_name(const std::string& name);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 3
FiniteGroup quaternion_group();      // Q8
FiniteGroup alternating_group_4();
FiniteGroup dicyclic_group_3();      // Dic3, order 12
FiniteMonoid and_monoid();           // {1,0} under AND; order-2 non-group

// Brute-force isomorphism search with order-profile pruning; fine for n <= 12.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// All monoid tables of the given order with identity fixed at index 0.
std::vector<FiniteMonoid> enumerate_monoids(int order);

// Subgroup generated by a subset, as sorted element indices.
std::vector<int> generated_subgroup(const FiniteGroup& g, std::vector<int> gens);
// Greedy minimal generating sequence (empty for the trivial group).
std::vector<int> generating_sequence(const FiniteGroup& g);

}  // namespace qc
