#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qc {

// Library error with a stable machine-readable kind ("NotAssociative",
// "CocycleViolation", "CoveringNotInvertible", ...). The CLI maps kinds to
// exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// One named check with the lexicographically first counterexample, if any.
struct Verdict {
  std::string relation;
  bool ok = true;
  std::string counterexample;  // empty when ok

  static Verdict pass(std::string rel) { return {std::move(rel), true, {}}; }
  static Verdict fail(std::string rel, std::string witness) {
    return {std::move(rel), false, std::move(witness)};
  }
};

struct VerdictBundle {
  std::vector<Verdict> items;

  bool all_ok() const {
    for (const auto& v : items)
      if (!v.ok) return false;
    return true;
  }
  void add(Verdict v) { items.push_back(std::move(v)); }
  void add(const VerdictBundle& other, const std::string& prefix = "") {
    for (auto v : other.items) {
      if (!prefix.empty()) v.relation = prefix + "." + v.relation;
      items.push_back(std::move(v));
    }
  }
  const Verdict* first_failure() const {
    for (const auto& v : items)
      if (!v.ok) return &v;
    return nullptr;
  }
};

}  // namespace qc
