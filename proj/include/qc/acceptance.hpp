#pragma once

#include <string>
#include <vector>

namespace qc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long long ms = 0;
  long long budget_ms = 0;
  std::string detail;  // first failure, when any
};

// Runs the whole acceptance suite; quick mode caps group orders at 6 and
// shrinks the randomized case counts.
std::vector<CriterionResult> run_acceptance(bool quick = false);

// Pretty one-line-per-criterion rendering; returns true when all pass.
bool print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace qc
