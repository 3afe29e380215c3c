#include "qc/acceptance.hpp"

#include "qc/classify.hpp"
#include "qc/cosimplicial.hpp"
#include "qc/group.hpp"
#include "qc/serde.hpp"
#include "qc/trees.hpp"
#include "qc/vines.hpp"
#include "qc/yb.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace qc {

namespace {

struct Ctx {
  bool quick = false;
  std::string fail;  // first failure description

  void expect(bool ok, const std::string& what) {
    if (!ok && fail.empty()) fail = what;
  }
};

std::vector<FiniteGroup> groups_up_to(int max_order) {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& g : catalog(n)) out.push_back(g);
  return out;
}

// 1. Group family: full QC suite for every catalog group of order <= 8;
//    R^2 = I exactly for the abelian ones and only those.
void criterion_group_family(Ctx& c) {
  const int cap = c.quick ? 6 : 8;
  for (const auto& g : groups_up_to(cap)) {
    SetYB r = yb_from_group(g);
    auto rep = qc_suite(g, r);
    c.expect(rep.qc_ok(), g.name + ": QC suite fails");
    const bool nearly = check_nearly_commutative(r);
    c.expect(nearly == g.is_abelian(), g.name + ": R^2 = I iff abelian fails");
  }
  if (cap >= 8) {
    for (const char* name : {"S3", "D4", "Q8"}) {
      SetYB r = yb_from_group(catalog_by_name(name));
      c.expect(!check_nearly_commutative(r), std::string(name) + ": R^2 unexpectedly trivial");
    }
  }
  // negative control: the plain swap is not mu-compatible on a non-abelian
  // group, and the checker must say so
  FiniteGroup s3 = catalog_by_name("S3");
  c.expect(!check_quasi_commutative(s3, swap_yb(s3.n)).ok, "swap on S3 must fail mu R = mu");
  c.expect(!qc_suite(s3, identity_yb(s3.n)).qc_ok(), "identity operator must fail on S3");
}

// 2. Theorem main round-trip on cobar complexes; covering fails for the
//    non-group monoids of orders 2 and 3.
void criterion_cobar_roundtrip(Ctx& c) {
  const int cap = c.quick ? 6 : 8;
  for (const auto& g : groups_up_to(cap)) {
    CobarComplex cx = cobar_from_group(g);
    c.expect(check_identities(cx).all_ok(), g.name + ": cobar identities fail");
    c.expect(check_covering_condition(cx).ok, g.name + ": covering condition fails");
    SetYB derived = derive_yb_set(cx);
    c.expect(derived.table == yb_from_group(g).table, g.name + ": derived R differs");
  }
  for (int order = 2; order <= 3; ++order) {
    int nongroups = 0;
    for (const auto& m : enumerate_monoids(order)) {
      if (try_group(m)) continue;
      ++nongroups;
      CobarComplex cx = cobar_from_group(m);
      c.expect(check_identities(cx).all_ok(), "non-group monoid: cobar identities must hold");
      auto covering = check_covering_condition(cx);
      c.expect(!covering.ok, "non-group monoid passes the covering condition");
      bool threw = false;
      try {
        derive_yb_set(cx);
      } catch (const Error& e) {
        threw = std::string(e.kind()) == "CoveringNotInvertible";
      }
      c.expect(threw, "derive_yb must refuse a non-group monoid");
    }
    c.expect(nongroups > 0, "monoid enumeration found no non-groups");
  }
}

// 3. Cocycle correspondence at orders <= 6: three constructions agree.
void criterion_cocycle_correspondence(Ctx& c) {
  for (const auto& g : groups_up_to(6)) {
    for (const auto& k : catalog(g.n)) {
      auto actions = enumerate_actions(g, k);
      for (const auto& act : actions) {
        for (const auto& phi : enumerate_bijective_cocycles(act)) {
          SetYB direct = yb_from_cocycle(phi);
          CocycleComplex cx = cosimp_from_cocycle(phi);
          c.expect(check_identities(cx).all_ok(),
                   g.name + "/" + k.name + ": complex identities fail");
          c.expect(check_covering_condition(cx).ok,
                   g.name + "/" + k.name + ": covering fails");
          SetYB derived = derive_yb_set(cx);
          c.expect(derived.table == direct.table,
                   g.name + "/" + k.name + ": derivation mismatch");
          CocycleData back = cocycle_from_yb(g, direct);
          SetYB again = yb_from_cocycle(back.cocycle);
          c.expect(again.table == direct.table, g.name + "/" + k.name + ": round-trip mismatch");
        }
      }
    }
  }
}

// 4. Independent oracle at orders <= 4: exact set equality of R tables.
void criterion_oracle(Ctx& c) {
  const int cap = c.quick ? 3 : 4;
  for (const auto& g : groups_up_to(cap)) {
    auto report = classify_group(g);
    auto brute = brute_force_qc_tables(g);
    std::vector<std::vector<int>> mine = report.distinct_r;
    c.expect(mine == brute, g.name + ": classification differs from brute force");
    for (const auto& e : report.entries) {
      auto verdicts = verify_entry(g, e);
      c.expect(verdicts.all_ok(), g.name + ": verify_entry fails");
    }
  }
}

// 5. Linear family: hopf/group agreement, quaternion skew algebra, comodule
//    complex rederivation. All equalities exact.
void criterion_linear_family(Ctx& c) {
  for (const char* name : {"Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"}) {
    const FiniteGroup g = catalog_by_name(name);
    LinYB from_hopf = yb_from_hopf(group_algebra(g));
    LinYB from_set = linearize(yb_from_group(g));
    c.expect(mat_equal(from_hopf.m, from_set.m), std::string(name) + ": hopf/linearize differ");
  }
  // quaternion cocycle on the Klein four-group
  TwoCocycleQ alpha = quaternion_cocycle();
  LinYB r = yb_from_skew_group(alpha);
  AlgebraSC a = skew_group_algebra(alpha);
  auto rep = qc_suite(a, r);
  c.expect(rep.qc_ok(), "quaternion skew algebra fails the QC suite");
  c.expect(check_nearly_commutative(r), "quaternion skew R should satisfy R^2 = I");
  // matches the central-extension criterion on Q8
  FiniteGroup q8 = catalog_by_name("Q8");
  int minus_one = -1;
  for (int x = 0; x < q8.n; ++x)
    if (q8.order_of(x) == 2) minus_one = x;
  auto ext = validate_central_extension(q8, {0, minus_one}, {Rat(1), Rat(-1)});
  c.expect(near_commutative_extension_test(ext), "Q8 extension should be nearly commutative");
  auto [kchi, induced] = k_chi_span(ext);
  c.expect(kchi.dim == 4, "k_chi[Q8] must be 4-dimensional");
  LinYB r2 = yb_from_skew_group(induced);
  c.expect(check_nearly_commutative(r2), "k_chi[Q8] operator should square to identity");
  // comodule complex rederivation recovers the skew-group operator
  ComoduleAlgebra comod = comodule_from_skew(alpha);
  ComoduleComplex cx = cosimp_from_comodule(comod);
  c.expect(check_identities(cx).all_ok(), "comodule complex identities fail");
  c.expect(check_covering_condition(cx).ok, "comodule covering condition fails");
  LinYB derived = derive_yb_lin(cx);
  c.expect(mat_equal(derived.m, r.m), "comodule derivation does not recover the operator");
}

// 6. Galois tau identities; tau^2 = I exactly over commutative Hopf algebras.
void criterion_galois_tau(Ctx& c) {
  struct Case {
    TwoCocycleQ alpha;
    bool commutative;
  };
  std::vector<Case> cases;
  cases.push_back({constant_two_cocycle(cyclic_group(2)), true});
  cases.push_back({quaternion_cocycle(), true});
  cases.push_back({constant_two_cocycle(catalog_by_name("S3")), false});
  for (auto& cs : cases) {
    ComoduleAlgebra comod = comodule_from_skew(cs.alpha);
    GaloisTauReport rep = galois_tau(comod);
    c.expect(rep.eq_d0.ok && rep.eq_d1.ok && rep.eq_sigma.ok,
             "tau defining identities fail on " + cs.alpha.group.name);
    c.expect(rep.hopf_commutative == cs.commutative, "commutativity flag wrong");
    c.expect(rep.tau_squared_identity == cs.commutative,
             "tau^2 = I must hold exactly when H is commutative (" + cs.alpha.group.name + ")");
  }
}

// 7. Braid/coface rewriting relations at n <= 4.
void criterion_bractcc(Ctx& c) {
  {
    FiniteGroup s3 = catalog_by_name("S3");
    auto rep = check_bractcc(s3, yb_from_group(s3), 4);
    c.expect(rep.all_ok(), "relations fail on (S3, conjugation operator)");
  }
  {
    FiniteGroup z4 = cyclic_group(4);
    auto rep = check_bractcc(z4, swap_yb(4), 4);
    c.expect(rep.all_ok(), "relations fail on (Z/4, swap)");
  }
}

// 8. Trees: category laws, factorization against the generator closure,
//    eval functoriality and localisation soundness over the Z/3 cobar.
void criterion_trees(Ctx& c);

// 9. Vines: equivalence/congruence spot checks and confluence.
void criterion_vines(Ctx& c);

// 10. Symmetric statements for abelian-K cocycles, |G| <= 4, n <= 3.
void criterion_symmetric(Ctx& c) {
  for (const auto& g : groups_up_to(4)) {
    for (const auto& k : catalog(g.n)) {
      if (!k.is_abelian()) continue;
      for (const auto& act : enumerate_actions(g, k)) {
        for (const auto& phi : enumerate_bijective_cocycles(act)) {
          for (int n = 2; n <= 3; ++n) {
            auto action = symmetric_action(phi, n);
            c.expect(action.checks.all_ok(),
                     g.name + "/" + k.name + ": symmetric action checks fail");
            auto power = symmetric_power(phi, n);
            c.expect(power.checks.all_ok(),
                     g.name + "/" + k.name + ": symmetric power checks fail");
          }
          SetYB r = yb_from_cocycle(phi);
          c.expect(check_nearly_commutative(r),
                   g.name + "/" + k.name + ": abelian K must give R^2 = I");
        }
      }
    }
  }
}

// --- trees helpers ---------------------------------------------------------

Tree2 random_tree(std::mt19937& rng, int max_tips) {
  std::uniform_int_distribution<int> tips_d(0, max_tips);
  int tips = tips_d(rng);
  int inner = tips == 0 ? std::uniform_int_distribution<int>(0, 2)(rng)
                        : std::uniform_int_distribution<int>(1, tips)(rng);
  std::vector<int> t(static_cast<size_t>(tips));
  for (int& v : t) v = std::uniform_int_distribution<int>(0, inner - 1)(rng);
  return validate_tree(tips, inner, std::move(t));
}

// random morphism out of a given source tree
TreeMorphism random_morphism_from(std::mt19937& rng, const Tree2& src) {
  // choose f1 monotone into a random inner count, then fibrewise maps
  const int dst_inner = src.inner == 0 ? std::uniform_int_distribution<int>(0, 2)(rng)
                                       : std::uniform_int_distribution<int>(1, src.inner + 1)(rng);
  std::vector<int> f1(static_cast<size_t>(src.inner));
  int cur = 0;
  for (int i = 0; i < src.inner; ++i) {
    cur += std::uniform_int_distribution<int>(0, 1)(rng);
    if (cur > dst_inner - 1) cur = dst_inner - 1;
    f1[static_cast<size_t>(i)] = cur;
  }
  // fibres of dst: sizes determined by where src tips land; build dst by
  // concatenating images fibre by fibre
  auto fibres = src.fibres();
  std::vector<std::vector<int>> dst_fibres(static_cast<size_t>(dst_inner));
  std::vector<int> f2(static_cast<size_t>(src.tips), -1);
  for (int j = 0; j < dst_inner; ++j) {
    // source fibres landing on j contribute tips in source order; optionally
    // collapse some neighbours to exercise non-injective f2
    for (int i = 0; i < src.inner; ++i) {
      if (f1[static_cast<size_t>(i)] != j) continue;
      for (int tip : fibres[static_cast<size_t>(i)]) {
        bool collapse = !dst_fibres[static_cast<size_t>(j)].empty() &&
                        std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        if (!collapse) dst_fibres[static_cast<size_t>(j)].push_back(tip);
        f2[static_cast<size_t>(tip)] = static_cast<int>(dst_fibres[static_cast<size_t>(j)].size()) - 1;
      }
    }
  }
  // assemble dst tree and shift f2 to global dst tip indices
  std::vector<int> dst_t;
  std::vector<int> fibre_base(static_cast<size_t>(dst_inner), 0);
  int acc = 0;
  for (int j = 0; j < dst_inner; ++j) {
    fibre_base[static_cast<size_t>(j)] = acc;
    acc += static_cast<int>(dst_fibres[static_cast<size_t>(j)].size());
    for (size_t p = 0; p < dst_fibres[static_cast<size_t>(j)].size(); ++p) dst_t.push_back(j);
  }
  Tree2 dst = validate_tree(acc, dst_inner, std::move(dst_t));
  for (int tip = 0; tip < src.tips; ++tip) {
    int j = f1[static_cast<size_t>(src.t[static_cast<size_t>(tip)])];
    f2[static_cast<size_t>(tip)] += fibre_base[static_cast<size_t>(j)];
  }
  return validate_tree_morphism(src, dst, std::move(f2), std::move(f1));
}

void criterion_trees(Ctx& c) {
  std::mt19937 rng(20240811);
  const int cases = c.quick ? 200 : 1000;
  // category + interchange laws
  for (int t = 0; t < cases; ++t) {
    Tree2 a = random_tree(rng, 5);
    TreeMorphism f = random_morphism_from(rng, a);
    TreeMorphism g = random_morphism_from(rng, f.dst);
    TreeMorphism h = random_morphism_from(rng, g.dst);
    TreeMorphism left = compose(h, compose(g, f));
    TreeMorphism right = compose(compose(h, g), f);
    c.expect(left == right, "composition is not associative");
    c.expect(compose(tree_identity(f.dst), f) == f, "left identity fails");
    c.expect(compose(f, tree_identity(f.src)) == f, "right identity fails");
    Tree2 b = random_tree(rng, 4);
    TreeMorphism u = random_morphism_from(rng, b);
    TreeMorphism v = random_morphism_from(rng, u.dst);
    c.expect(compose(tensor(g, v), tensor(f, u)) == tensor(compose(g, f), compose(v, u)),
             "interchange law fails");
  }
  // generator factorization against the BFS closure (exhaustive, <= 4 tips)
  const int max_tips = c.quick ? 3 : 4;
  auto closure = generator_closure(max_tips);
  std::set<std::string> closure_keys;
  auto key = [](const TreeMorphism& m) {
    std::ostringstream os;
    os << m.src.tips << "." << m.src.inner << ".";
    for (int v : m.src.t) os << v << ",";
    os << "|" << m.dst.tips << "." << m.dst.inner << ".";
    for (int v : m.dst.t) os << v << ",";
    os << "|";
    for (int v : m.f2) os << v << ",";
    os << "|";
    for (int v : m.f1) os << v << ",";
    return os.str();
  };
  int factored = 0;
  for (const auto& m : closure) {
    closure_keys.insert(key(m));
    if (!is_tip_bijective(m)) continue;
    try {
      auto layers = factor_into_generators(m);
      TreeMorphism re = layer_morphism(layers.at(0));
      for (size_t l = 1; l < layers.size(); ++l) re = compose(layer_morphism(layers[l]), re);
      c.expect(re == m, "factorization does not recompose");
      ++factored;
    } catch (const Error& e) {
      c.expect(false, std::string("closure member fails to factor: ") + e.what());
    }
  }
  c.expect(factored > 0, "closure contained no tip-bijective morphisms");
  // completeness the other way: greedy factorization succeeds exactly on the
  // closure, over every tip-bijective morphism of bounded size
  int outside = 0, inside = 0, eval_checked = 0;
  CobarComplex z3_complex = cobar_from_group(cyclic_group(3));
  for (int tips = 0; tips <= max_tips; ++tips) {
    int seen = 0;
    for (const auto& m : enumerate_tip_bijective(tips, max_tips)) {
      bool in_closure = closure_keys.count(key(m)) > 0;
      bool factors = true;
      try {
        auto layers = factor_into_generators(m);
        TreeMorphism re = layer_morphism(layers.at(0));
        for (size_t l = 1; l < layers.size(); ++l) re = compose(layer_morphism(layers[l]), re);
        if (!(re == m)) factors = false;
      } catch (const Error&) {
        factors = false;
      }
      c.expect(factors == in_closure, "generated class and factorization disagree");
      (factors ? inside : outside)++;
      // localisation soundness: tip-bijective evals are invertible over a
      // covering-condition complex (sampled; the closure is covered in full)
      if (tips > 0 && (seen++ % 37) == 0) {
        Mor ev = eval(m, z3_complex);
        c.expect(ev.is_invertible(), "tip-bijective eval is not invertible over Z/3");
        ++eval_checked;
      }
    }
  }
  c.expect(inside > 0 && outside > 0, "enumeration should straddle the generated class");
  for (const auto& m : closure) {
    if (m.src.tips == 0) continue;
    Mor ev = eval(m, z3_complex);
    c.expect(ev.is_invertible(), "generated eval is not invertible over Z/3");
  }
  c.expect(eval_checked > 0, "no eval samples checked");
  // decompose_covering round-trip on generated coverings
  for (const auto& m : closure) {
    if (!is_tip_bijective(m) || m.src.tips == 0) continue;
    try {
      auto factors = decompose_covering(m);
      if (factors.empty()) continue;
      TreeMorphism re = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) re = tensor(re, factors[i]);
      c.expect(re == m, "covering decomposition does not recompose");
    } catch (const Error& e) {
      if (std::string(e.kind()) != "NotFactorable") c.expect(false, e.what());
    }
  }
  // eval functoriality on random composable pairs
  CobarComplex z3 = cobar_from_group(cyclic_group(3));
  for (int t = 0; t < (c.quick ? 50 : 200); ++t) {
    Tree2 a = random_tree(rng, 4);
    TreeMorphism f = random_morphism_from(rng, a);
    TreeMorphism g = random_morphism_from(rng, f.dst);
    Mor lhs = eval(compose(g, f), z3);
    Mor rhs = eval(g, z3).compose(eval(f, z3));
    c.expect(lhs.equals(rhs), "eval does not preserve composition");
  }
}

void criterion_vines(Ctx& c) {
  std::mt19937 rng(777);
  auto random_vines = [&](int src) {
    int dst = std::uniform_int_distribution<int>(1, src)(rng);
    std::vector<int> delta(static_cast<size_t>(src));
    int cur = 0;
    for (int i = 0; i < src; ++i) {
      cur += std::uniform_int_distribution<int>(0, 1)(rng);
      if (cur > dst - 1) cur = dst - 1;
      delta[static_cast<size_t>(i)] = cur;
    }
    // force surjectivity onto [dst] by construction of dst
    int top = delta.empty() ? 0 : delta.back() + 1;
    for (int& v : delta) v = std::min(v, top - 1);
    BraidWord braid{src, {}};
    int len = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int l = 0; l < len && src > 1; ++l) {
      int idx = std::uniform_int_distribution<int>(1, src - 1)(rng);
      braid.letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? idx : -idx);
    }
    return validate_vines(src, top, std::move(braid), std::move(delta));
  };
  // the fibre-stabilising example pair
  {
    VinesMorphism with_braid = validate_vines(2, 1, BraidWord{2, {1}}, {0, 0});
    VinesMorphism plain = validate_vines(2, 1, BraidWord{2, {}}, {0, 0});
    c.expect(vines_equal(with_braid, plain), "fibre-stabilising pair must be equal");
    VinesMorphism id_braid = validate_vines(2, 2, BraidWord{2, {1}}, {0, 1});
    VinesMorphism id_plain = vines_identity(2);
    c.expect(!vines_equal(id_braid, id_plain), "identity fibres must separate braids");
    c.expect(vines_equal(id_plain, id_plain), "reflexivity fails");
  }
  const int cases = c.quick ? 150 : 500;
  for (int t = 0; t < cases; ++t) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    VinesMorphism f = random_vines(n);
    VinesMorphism g = random_vines(f.dst);
    VinesMorphism h = random_vines(g.dst);
    // normal-form confluence: both association orders agree up to vines_equal
    VinesMorphism left = vines_compose(h, vines_compose(g, f));
    VinesMorphism right = vines_compose(vines_compose(h, g), f);
    c.expect(vines_equal(left, right), "composition is not confluent");
    // identity neutrality
    c.expect(vines_equal(vines_compose(vines_identity(f.dst), f), f), "left identity fails");
    c.expect(vines_equal(vines_compose(f, vines_identity(f.src)), f), "right identity fails");
    // equivalence: symmetry/transitivity on perturbed pairs
    VinesMorphism fp = f;
    if (f.src > 1) {
      // append a braid letter whose permutation stabilises the fibres when it
      // acts inside a fibre
      for (int i = 1; i < f.src; ++i)
        if (f.delta[static_cast<size_t>(i - 1)] == f.delta[static_cast<size_t>(i)]) {
          fp.braid.letters.push_back(i);
          break;
        }
    }
    c.expect(vines_equal(f, fp) == vines_equal(fp, f), "symmetry fails");
    if (vines_equal(f, fp)) {
      // congruence in both slots
      c.expect(vines_equal(vines_compose(g, f), vines_compose(g, fp)),
               "congruence in the right slot fails");
    }
    VinesMorphism gf = vines_compose(g, f);
    c.expect(gf.src == f.src && gf.dst == g.dst, "composite has wrong shape");
  }
}

using CriterionFn = std::function<void(Ctx&)>;

struct Spec {
  int id;
  const char* name;
  long long budget_ms;
  CriterionFn fn;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(bool quick) {
  std::vector<Spec> specs = {
      {1, "group family: QC suite + involutivity iff abelian", 5000, criterion_group_family},
      {2, "cobar derivation round-trip + covering failures", 10000, criterion_cobar_roundtrip},
      {3, "cocycle correspondence at orders <= 6", 60000, criterion_cocycle_correspondence},
      {4, "independent brute-force oracle at orders <= 4", 120000, criterion_oracle},
      {5, "linear family: hopf, skew, comodule rederivation", 30000, criterion_linear_family},
      {6, "galois tau identities and involutivity", 5000, criterion_galois_tau},
      {7, "braid/cosimplicial rewriting relations (n <= 4)", 10000, criterion_bractcc},
      {8, "tree category, generator factorization, eval", 60000, criterion_trees},
      {9, "vines normal forms: equivalence and confluence", 10000, criterion_vines},
      {10, "symmetric action, powers and fixed points", 30000, criterion_symmetric},
  };
  std::vector<CriterionResult> out;
  for (auto& spec : specs) {
    Ctx ctx;
    ctx.quick = quick;
    auto start = std::chrono::steady_clock::now();
    try {
      spec.fn(ctx);
    } catch (const std::exception& e) {
      ctx.expect(false, std::string("exception: ") + e.what());
    }
    auto end = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    r.budget_ms = spec.budget_ms;
    r.pass = ctx.fail.empty() && r.ms <= spec.budget_ms;
    r.detail = ctx.fail;
    if (ctx.fail.empty() && r.ms > spec.budget_ms) r.detail = "over time budget";
    out.push_back(std::move(r));
  }
  return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] C%-2d %-55s %6lld ms (budget %lld ms)%s%s\n", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.ms, r.budget_ms, r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    all = all && r.pass;
  }
  return all;
}

}  // namespace qc
