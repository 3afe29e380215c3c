#include "qc/serde.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qc {

namespace {

Json rat_matrix(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat rat_matrix_from(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("ParseError", "matrix must be a non-empty array");
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw Error("ParseError", "ragged matrix");
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          Rat::parse(j.at(i).at(c).get<std::string>());
  }
  return m;
}

std::vector<int> int_vector(const Json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

Json table_2d(const std::vector<int>& flat, int n) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(flat[static_cast<size_t>(i) * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> table_2d_from(const Json& j) {
  std::vector<int> flat;
  for (const auto& row : j)
    for (const auto& v : row) flat.push_back(v.get<int>());
  return flat;
}

}  // namespace

Json to_json(const FiniteMonoid& m) {
  return Json{{"schema", 1},
              {"kind", "monoid"},
              {"name", m.name},
              {"order", m.n},
              {"table", table_2d(m.table, m.n)},
              {"identity", m.identity}};
}

Json to_json(const FiniteGroup& g) {
  Json j = to_json(static_cast<const FiniteMonoid&>(g));
  j["kind"] = "group";
  j["inverse"] = g.inv;
  return j;
}

Json to_json(const SetYB& r) {
  Json pairs = Json::array();
  for (int p = 0; p < r.n * r.n; ++p) {
    int q = r.table[static_cast<size_t>(p)];
    pairs.push_back(Json::array({q / r.n, q % r.n}));
  }
  return Json{{"schema", 1}, {"kind", "set_yb"}, {"n", r.n}, {"table", pairs}};
}

Json to_json(const LinYB& r) {
  return Json{{"schema", 1}, {"kind", "lin_yb"}, {"dim", r.d}, {"matrix", rat_matrix(r.m)}};
}

Json to_json(const AlgebraSC& a) {
  Json sc = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < a.dim; ++j) {
      Json row = Json::array();
      for (int k = 0; k < a.dim; ++k) row.push_back(a.c(i, j, k).str());
      plane.push_back(std::move(row));
    }
    sc.push_back(std::move(plane));
  }
  Json unit = Json::array();
  for (int i = 0; i < a.dim; ++i) unit.push_back(a.unit(i).str());
  return Json{{"schema", 1}, {"kind", "algebra"}, {"name", a.name}, {"dim", a.dim},
              {"sc", std::move(sc)}, {"unit", std::move(unit)}};
}

Json to_json(const TwoCocycleQ& a) {
  Json rows = Json::array();
  for (int s = 0; s < a.group.n; ++s) {
    Json row = Json::array();
    for (int t = 0; t < a.group.n; ++t) row.push_back(a.at(s, t).str());
    rows.push_back(std::move(row));
  }
  return Json{{"schema", 1}, {"kind", "two_cocycle"}, {"group", to_json(a.group)},
              {"alpha", std::move(rows)}};
}

Json to_json(const Tree2& t) {
  return Json{{"schema", 1}, {"kind", "tree"}, {"tips", t.tips}, {"inner", t.inner}, {"t", t.t}};
}

Json to_json(const TreeMorphism& m) {
  return Json{{"schema", 1}, {"kind", "tree_morphism"}, {"src", to_json(m.src)},
              {"dst", to_json(m.dst)}, {"f2", m.f2}, {"f1", m.f1}};
}

Json to_json(const VinesMorphism& v) {
  return Json{{"schema", 1}, {"kind", "vines"},    {"src", v.src},
              {"dst", v.dst}, {"braid", v.braid.letters}, {"delta", v.delta}};
}

Json to_json(const Verdict& v) {
  Json j{{"relation", v.relation}, {"ok", v.ok}};
  if (!v.ok) j["counterexample"] = v.counterexample;
  return j;
}

Json to_json(const VerdictBundle& v) {
  Json items = Json::array();
  for (const auto& item : v.items) items.push_back(to_json(item));
  return Json{{"ok", v.all_ok()}, {"checks", std::move(items)}};
}

Json to_json(const QCSuiteReport& v) { return to_json(v.bundle()); }

Json to_json(const ClassificationReport& v) {
  Json entries = Json::array();
  for (const auto& e : v.entries) {
    entries.push_back(Json{{"k", e.k_name},
                           {"action", e.action_index},
                           {"cocycle", e.cocycle},
                           {"r_pairs", e.r_table},
                           {"nearly_commutative", e.nearly_commutative},
                           {"verified", e.verified}});
  }
  Json distinct = Json::array();
  for (const auto& r : v.distinct_r) distinct.push_back(r);
  Json orbits = Json::array();
  for (const auto& o : v.aut_orbits) orbits.push_back(o);
  return Json{{"schema", 1},
              {"kind", "classification"},
              {"group", v.group_name},
              {"order", v.order},
              {"nearly_only", v.nearly_only},
              {"entries", std::move(entries)},
              {"distinct_r", std::move(distinct)},
              {"aut_orbits", std::move(orbits)},
              {"count", v.distinct_r.size()}};
}

namespace {

Json mor_to_json(const Mor& m) {
  if (m.kind() == CarrierKind::Set)
    return Json{{"src", m.src()}, {"dst", m.dst()}, {"table", m.table()}};
  return Json{{"src", m.src()}, {"dst", m.dst()}, {"matrix", rat_matrix(m.dense())}};
}

Mor mor_from_json(const Json& j, CarrierKind kind) {
  const int src = j.at("src").get<int>(), dst = j.at("dst").get<int>();
  if (kind == CarrierKind::Set) return Mor::set_map(src, dst, int_vector(j.at("table")));
  Mat m = rat_matrix_from(j.at("matrix"));
  if (m.rows() != dst || m.cols() != src) throw Error("ParseError", "matrix shape mismatch");
  return Mor::lin_map(m);
}

Json monoid_object_to_json(const MonoidObject& m) {
  return Json{{"size", m.carrier.size}, {"mul", mor_to_json(m.mul)},
              {"unit", mor_to_json(m.unit)}};
}

MonoidObject monoid_object_from_json(const Json& j, CarrierKind kind) {
  MonoidObject m{Obj{kind, j.at("size").get<int>()}, mor_from_json(j.at("mul"), kind),
                 mor_from_json(j.at("unit"), kind)};
  auto checks = check_monoid_object(m);
  if (!checks.all_ok())
    throw Error("NotAssociative", "component is not a monoid: " + checks.first_failure()->relation);
  return m;
}

}  // namespace

Json complex_to_json(const CosimpMonoid& c) {
  Json j{{"schema", 1},
         {"kind", "complex"},
         {"carrier", c.kind() == CarrierKind::Set ? "set" : "vec"},
         {"flavor", c.has_codegeneracies() ? "full" : "semi"},
         {"m1", monoid_object_to_json(c.component(1))},
         {"m2", monoid_object_to_json(c.component(2))},
         {"m3", monoid_object_to_json(c.component(3))},
         {"d0_12", mor_to_json(c.coface(1, 0))},
         {"d1_12", mor_to_json(c.coface(1, 1))},
         {"d0_23", mor_to_json(c.coface(2, 0))},
         {"d1_23", mor_to_json(c.coface(2, 1))},
         {"d2_23", mor_to_json(c.coface(2, 2))}};
  if (c.has_codegeneracies()) {
    j["s0_21"] = mor_to_json(c.codegeneracy(2, 0));
    j["s0_32"] = mor_to_json(c.codegeneracy(3, 0));
    j["s1_32"] = mor_to_json(c.codegeneracy(3, 1));
  }
  return j;
}

std::unique_ptr<TruncCosimp> complex_from_json(const Json& j) {
  const std::string carrier = j.at("carrier").get<std::string>();
  CarrierKind kind = carrier == "vec" ? CarrierKind::Vec : CarrierKind::Set;
  const bool semi = j.value("flavor", std::string("full")) == "semi";
  MonoidObject m1 = monoid_object_from_json(j.at("m1"), kind);
  MonoidObject m2 = monoid_object_from_json(j.at("m2"), kind);
  MonoidObject m3 = monoid_object_from_json(j.at("m3"), kind);
  std::vector<Mor> d12{mor_from_json(j.at("d0_12"), kind), mor_from_json(j.at("d1_12"), kind)};
  std::vector<Mor> d23{mor_from_json(j.at("d0_23"), kind), mor_from_json(j.at("d1_23"), kind),
                       mor_from_json(j.at("d2_23"), kind)};
  std::vector<Mor> s21, s32;
  if (!semi) {
    s21 = {mor_from_json(j.at("s0_21"), kind)};
    s32 = {mor_from_json(j.at("s0_32"), kind), mor_from_json(j.at("s1_32"), kind)};
  }
  return std::make_unique<TruncCosimp>(
      semi ? TruncCosimp::Flavor::Semi : TruncCosimp::Flavor::Full, std::move(m1), std::move(m2),
      std::move(m3), std::move(d12), std::move(d23), std::move(s21), std::move(s32));
}

FiniteMonoid monoid_from_json(const Json& j) {
  auto table = table_2d_from(j.at("table"));
  int identity = j.value("identity", 0);
  FiniteMonoid m = validate_monoid(table, identity, j.value("name", std::string()));
  return m;
}

FiniteGroup group_from_json(const Json& j) {
  auto table = table_2d_from(j.at("table"));
  int identity = j.value("identity", 0);
  return validate_group(table, identity, j.value("name", std::string()));
}

SetYB set_yb_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  SetYB r{n, {}};
  for (const auto& pair : j.at("table")) {
    int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("ParseError", "pair out of range");
    r.table.push_back(a * n + b);
  }
  if (r.table.size() != static_cast<size_t>(n) * n)
    throw Error("ParseError", "table must list n^2 pairs");
  return r;
}

Tree2 tree_from_json(const Json& j) {
  return validate_tree(j.at("tips").get<int>(), j.at("inner").get<int>(), int_vector(j.at("t")));
}

TreeMorphism tree_morphism_from_json(const Json& j) {
  return validate_tree_morphism(tree_from_json(j.at("src")), tree_from_json(j.at("dst")),
                                int_vector(j.at("f2")), int_vector(j.at("f1")));
}

VinesMorphism vines_from_json(const Json& j) {
  const int src = j.at("src").get<int>(), dst = j.at("dst").get<int>();
  BraidWord braid{src, int_vector(j.at("braid"))};
  return validate_vines(src, dst, std::move(braid), int_vector(j.at("delta")));
}

AlgebraSC algebra_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<Rat> sc;
  for (const auto& plane : j.at("sc"))
    for (const auto& row : plane)
      for (const auto& v : row) sc.push_back(Rat::parse(v.get<std::string>()));
  Vec unit(dim);
  int i = 0;
  for (const auto& v : j.at("unit")) unit(i++) = Rat::parse(v.get<std::string>());
  return make_algebra(dim, std::move(sc), std::move(unit), j.value("name", std::string()));
}

HopfSC hopf_from_json(const Json& j) {
  AlgebraSC a = algebra_from_json(j);
  HopfSC h;
  static_cast<AlgebraSC&>(h) = std::move(a);
  h.coproduct = rat_matrix_from(j.at("coproduct"));
  Vec counit(h.dim);
  int i = 0;
  for (const auto& v : j.at("counit")) counit(i++) = Rat::parse(v.get<std::string>());
  h.counit = std::move(counit);
  h.antipode = rat_matrix_from(j.at("antipode"));
  h.antipode_inv = j.contains("antipode_inv") ? rat_matrix_from(j.at("antipode_inv"))
                                              : mat_invert(h.antipode);
  return h;
}

FiniteMonoid load_monoid(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_by_name(spec.substr(8));
  Json j;
  if (spec == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(spec);
    if (!in) throw Error("ParseError", "cannot open '" + spec + "'");
    in >> j;
  }
  return monoid_from_json(j);
}

}  // namespace qc
