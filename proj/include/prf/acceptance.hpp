#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prf {

struct AcceptanceOptions {
  bool extended = false;        // criterion 1 also sweeps 27 < q <= 81
  std::vector<int> only;        // empty: all criteria
  std::ostream* progress = nullptr;
};

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace prf
