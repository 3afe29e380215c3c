#pragma once

#include "qc/algebra.hpp"
#include "qc/classify.hpp"
#include "qc/cosimplicial.hpp"
#include "qc/group.hpp"
#include "qc/trees.hpp"
#include "qc/vines.hpp"
#include "qc/yb.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace qc {

using Json = nlohmann::json;

// All emitted documents carry {"schema": 1}. Rationals serialize as "p/q"
// strings, tables as row-major arrays of element indices.

Json to_json(const FiniteMonoid& m);
Json to_json(const FiniteGroup& g);
Json to_json(const SetYB& r);
Json to_json(const LinYB& r);
Json to_json(const AlgebraSC& a);
Json to_json(const TwoCocycleQ& a);
Json to_json(const Tree2& t);
Json to_json(const TreeMorphism& m);
Json to_json(const VinesMorphism& v);
Json to_json(const Verdict& v);
Json to_json(const VerdictBundle& v);
Json to_json(const QCSuiteReport& v);
Json to_json(const ClassificationReport& v);
Json complex_to_json(const CosimpMonoid& c);

FiniteMonoid monoid_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);
SetYB set_yb_from_json(const Json& j);
Tree2 tree_from_json(const Json& j);
TreeMorphism tree_morphism_from_json(const Json& j);
VinesMorphism vines_from_json(const Json& j);
AlgebraSC algebra_from_json(const Json& j);
HopfSC hopf_from_json(const Json& j);
// Stored length-3 complexes: {"carrier": "set"|"vec", "flavor": "full"|"semi",
// "m1".."m3", "d0_12","d1_12","d0_23","d1_23","d2_23","s0_21","s0_32","s1_32"}
std::unique_ptr<TruncCosimp> complex_from_json(const Json& j);

// "catalog:NAME" or a JSON file/dash for stdin; shared by the CLI commands.
FiniteMonoid load_monoid(const std::string& spec);

}  // namespace qc
