#pragma once

#include <string>
#include <vector>

namespace lrs {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the thirteen acceptance criteria in order. Exceptions inside a
/// criterion are reported as a failure of that criterion.
std::vector<CriterionResult> runAcceptance();

/// One criterion by id (1..13); std::invalid_argument otherwise.
CriterionResult runCriterion(int id);

}  // namespace lrs
