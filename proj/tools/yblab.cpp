// yblab: verification, derivation and classification of quasi-commutative
// structures on finite monoids, groups and algebras, with JSON I/O.
#include "qc/acceptance.hpp"
#include "qc/classify.hpp"
#include "qc/cosimplicial.hpp"
#include "qc/serde.hpp"
#include "qc/trees.hpp"
#include "qc/vines.hpp"
#include "qc/yb.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

namespace {

using qc::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;

Json read_json(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw qc::Error("ParseError", "cannot open '" + path + "'");
      in >> j;
    }
  } catch (const qc::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw qc::Error("ParseError", e.what());
  }
  return j;
}

void emit(const Json& j, const std::string& format) {
  if (format == "table" && j.contains("checks")) {
    for (const auto& item : j.at("checks"))
      std::cout << (item.at("ok").get<bool>() ? "ok   " : "FAIL ")
                << item.at("relation").get<std::string>()
                << (item.contains("counterexample")
                        ? "  " + item.at("counterexample").get<std::string>()
                        : "")
                << "\n";
    return;
  }
  if (format == "table" && j.value("kind", std::string()) == "classification") {
    std::cout << "group " << j.at("group").get<std::string>() << " order " << j.at("order")
              << ": " << j.at("count") << " distinct operator(s), " << j.at("entries").size()
              << " (K, action, cocycle) triple(s)\n";
    for (const auto& e : j.at("entries"))
      std::cout << "  K=" << e.at("k").get<std::string>() << " action=" << e.at("action")
                << " cocycle=" << e.at("cocycle").dump()
                << (e.at("nearly_commutative").get<bool>() ? " involutive" : "") << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

// group JSON / catalog:NAME / complex JSON, sniffed by shape
struct VerifyInput {
  std::unique_ptr<qc::CosimpMonoid> complex;
  std::optional<qc::FiniteMonoid> monoid;
  std::optional<qc::HopfSC> hopf;
};

VerifyInput load_input(const std::string& spec) {
  VerifyInput in;
  if (spec.rfind("catalog:", 0) == 0) {
    in.monoid = qc::catalog_by_name(spec.substr(8));
    return in;
  }
  Json j = read_json(spec);
  const std::string kind = j.value("kind", std::string());
  if (kind == "complex" || j.contains("m1")) {
    in.complex = qc::complex_from_json(j);
  } else if (kind == "hopf" || j.contains("coproduct")) {
    in.hopf = qc::hopf_from_json(j);
  } else {
    in.monoid = qc::monoid_from_json(j);
  }
  return in;
}

int cmd_verify(const std::string& input, const std::string& suite, const std::string& format) {
  VerifyInput in = load_input(input);
  Json report;
  bool ok = false;
  if (suite == "yb") {
    if (in.hopf) {
      qc::LinYB r = qc::yb_from_hopf(*in.hopf);
      auto rep = qc::qc_suite(static_cast<const qc::AlgebraSC&>(*in.hopf), r);
      report = qc::to_json(rep);
      ok = rep.qc_ok();
    } else if (in.monoid) {
      auto g = qc::try_group(*in.monoid);
      if (!g) throw qc::Error("NoInverse", "yb suite needs a group input");
      qc::SetYB r = qc::yb_from_group(*g);
      auto rep = qc::qc_suite(*g, r);
      report = qc::to_json(rep);
      report["r"] = qc::to_json(r);
      ok = rep.qc_ok();
    } else {
      throw qc::Error("ParseError", "yb suite needs a group or hopf input");
    }
  } else if (suite == "cosimp") {
    std::unique_ptr<qc::CosimpMonoid> owned;
    const qc::CosimpMonoid* cx = in.complex.get();
    if (!cx) {
      if (!in.monoid) throw qc::Error("ParseError", "cosimp suite needs a monoid or complex");
      owned = std::make_unique<qc::CobarComplex>(qc::cobar_from_group(*in.monoid));
      cx = owned.get();
    }
    auto identities = qc::check_identities(*cx, !cx->has_codegeneracies());
    auto covering = qc::check_covering_condition(*cx);
    report = qc::to_json(identities);
    report["covering_ok"] = covering.ok;
    if (!covering.ok) report["failing_covering"] = covering.failing.str();
    ok = identities.all_ok() && covering.ok;
  } else if (suite == "hopf") {
    if (!in.hopf && in.monoid) {
      auto g = qc::try_group(*in.monoid);
      if (!g) throw qc::Error("NoInverse", "hopf suite needs a group or hopf input");
      in.hopf = qc::group_algebra(*g);
    }
    if (!in.hopf) throw qc::Error("ParseError", "hopf suite needs a hopf input");
    auto rep = qc::check_hopf(*in.hopf);
    qc::VerdictBundle bundle;
    bundle.add(rep.associativity);
    bundle.add(rep.coassociativity);
    bundle.add(rep.counit);
    bundle.add(rep.antipode);
    bundle.add(rep.antipode_invertible);
    bundle.add(rep.coproduct_multiplicative);
    bundle.add(rep.counit_multiplicative);
    report = qc::to_json(bundle);
    ok = rep.all_ok();
  } else {
    throw qc::Error("ParseError", "unknown suite '" + suite + "'");
  }
  report["schema"] = 1;
  emit(report, format);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_derive(const std::string& input, const std::string& format, bool emit_complex) {
  VerifyInput in = load_input(input);
  std::unique_ptr<qc::CosimpMonoid> owned;
  const qc::CosimpMonoid* cx = in.complex.get();
  if (!cx) {
    if (!in.monoid) throw qc::Error("ParseError", "derive needs a monoid or complex input");
    owned = std::make_unique<qc::CobarComplex>(qc::cobar_from_group(*in.monoid));
    cx = owned.get();
  }
  auto identities = qc::check_identities(*cx, !cx->has_codegeneracies());
  Json report{{"schema", 1}, {"identities", qc::to_json(identities)}};
  if (emit_complex) report["complex"] = qc::complex_to_json(*cx);
  if (!identities.all_ok()) {
    emit(report, format);
    return kExitCheckFailed;
  }
  if (cx->kind() == qc::CarrierKind::Set) {
    qc::SetYB r = qc::derive_yb_set(*cx);
    report["r"] = qc::to_json(r);
    const int sz = cx->component(1).carrier.size;
    qc::FiniteMonoid m;
    m.n = sz;
    m.identity = cx->component(1).unit.apply(0);
    m.table = cx->component(1).mul.table();
    auto rep = qc::qc_suite(m, r);
    report["suite"] = qc::to_json(rep);
    emit(report, format);
    return rep.qc_ok() ? kExitOk : kExitCheckFailed;
  }
  qc::LinYB r = qc::derive_yb_lin(*cx);
  report["r"] = qc::to_json(r);
  emit(report, format);
  return kExitOk;
}

int cmd_classify(const std::string& input, bool nearly, bool oracle, const std::string& format) {
  qc::FiniteMonoid m = qc::load_monoid(input);
  auto g = qc::try_group(m);
  if (!g) throw qc::Error("NoInverse", "classification needs a group");
  auto report = nearly ? qc::classify_nearly_commutative(*g) : qc::classify_group(*g);
  Json j = qc::to_json(report);
  if (oracle) {
    if (g->n > 6) throw qc::Error("OrderOutOfRange", "oracle cross-check capped at order 6");
    auto brute = qc::brute_force_qc_tables(*g);
    std::vector<std::vector<int>> mine = report.distinct_r;
    if (nearly) {
      // oracle enumerates all QC structures; filter to involutive ones
      std::vector<std::vector<int>> inv;
      for (auto& t : brute) {
        qc::SetYB r{g->n, t};
        if (qc::check_nearly_commutative(r)) inv.push_back(t);
      }
      brute = std::move(inv);
    }
    j["oracle_count"] = brute.size();
    j["oracle_diff_empty"] = brute == mine;
    if (brute != mine) {
      emit(j, format);
      return kExitCheckFailed;
    }
  }
  emit(j, format);
  return kExitOk;
}

int cmd_trees(const std::string& sub, const std::vector<std::string>& args,
              const std::string& format) {
  if (sub == "compose") {
    if (args.size() != 2) throw qc::Error("ParseError", "compose needs two morphism files");
    auto f = qc::tree_morphism_from_json(read_json(args[0]));
    auto g = qc::tree_morphism_from_json(read_json(args[1]));
    emit(qc::to_json(qc::compose(g, f)), format);
    return kExitOk;
  }
  if (sub == "factor") {
    if (args.size() != 1) throw qc::Error("ParseError", "factor needs one morphism file");
    auto f = qc::tree_morphism_from_json(read_json(args[0]));
    auto layers = qc::factor_into_generators(f);
    Json out{{"schema", 1}, {"kind", "factorization"}, {"layers", Json::array()}};
    for (const auto& layer : layers) {
      Json items = Json::array();
      for (const auto& item : layer.items) {
        if (item.kind == qc::GenItem::Id)
          items.push_back(Json{{"item", "id"}, {"tree", qc::to_json(item.subtree)}});
        else
          items.push_back(Json{{"item", item.kind == qc::GenItem::MergeId ? "merge_id"
                                                                          : "merge_swap"}});
      }
      out["layers"].push_back(Json{{"items", std::move(items)},
                                   {"morphism", qc::to_json(qc::layer_morphism(layer))}});
    }
    emit(out, format);
    return kExitOk;
  }
  if (sub == "vines-compose") {
    if (args.size() != 2) throw qc::Error("ParseError", "vines-compose needs two files");
    auto f = qc::vines_from_json(read_json(args[0]));
    auto g = qc::vines_from_json(read_json(args[1]));
    emit(qc::to_json(qc::vines_compose(g, f)), format);
    return kExitOk;
  }
  if (sub == "vines-equal") {
    if (args.size() != 2) throw qc::Error("ParseError", "vines-equal needs two files");
    auto a = qc::vines_from_json(read_json(args[0]));
    auto b = qc::vines_from_json(read_json(args[1]));
    bool eq = qc::vines_equal(a, b);
    emit(Json{{"schema", 1}, {"equal", eq}}, format);
    return eq ? kExitOk : kExitCheckFailed;
  }
  throw qc::Error("ParseError", "unknown trees subcommand '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-commutative structure toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  int threads = 0;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", threads);  // accepted for pipeline compatibility;
                                         // the library runs deterministically
  if (const char* env = std::getenv("YBLAB_THREADS"); env && threads == 0)
    threads = std::atoi(env);

  auto* verify = app.add_subcommand("verify", "run an axiom suite on a group/algebra/complex");
  verify->fallthrough();
  std::string verify_input, verify_suite = "yb";
  verify->add_option("input", verify_input)->required();
  verify->add_option("--suite", verify_suite)->check(CLI::IsMember({"yb", "cosimp", "hopf"}));

  auto* derive = app.add_subcommand("derive", "derive the operator from a cosimplicial complex");
  derive->fallthrough();
  std::string derive_input;
  bool emit_complex = false;
  derive->add_option("input", derive_input)->required();
  derive->add_flag("--emit-complex", emit_complex);

  auto* classify = app.add_subcommand("classify", "enumerate quasi-commutative structures");
  classify->fallthrough();
  std::string classify_input;
  bool nearly = false, oracle = false;
  classify->add_option("input", classify_input)->required();
  classify->add_flag("--nearly", nearly);
  classify->add_flag("--oracle", oracle);

  auto* trees = app.add_subcommand("trees", "tree morphism operations");
  trees->fallthrough();
  std::string trees_sub;
  std::vector<std::string> trees_args;
  trees->add_option("subcommand", trees_sub)
      ->required()
      ->check(CLI::IsMember({"compose", "factor", "vines-compose", "vines-equal"}));
  trees->add_option("args", trees_args);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->fallthrough();
  bool quick = false;
  selftest->add_flag("--quick", quick);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(verify_input, verify_suite, format);
    if (derive->parsed()) return cmd_derive(derive_input, format, emit_complex);
    if (classify->parsed()) return cmd_classify(classify_input, nearly, oracle, format);
    if (trees->parsed()) return cmd_trees(trees_sub, trees_args, format);
    if (selftest->parsed()) {
      auto results = qc::run_acceptance(quick);
      bool ok = qc::print_acceptance(results);
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const qc::Error& e) {
    Json err{{"schema", 1}, {"error", e.kind()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return e.kind() == "ParseError" ? kExitParseError : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
