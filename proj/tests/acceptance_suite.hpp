#pragma once

#include <string>
#include <vector>

namespace regen::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  // Reduced sample counts for a fast smoke pass; thresholds widen only where
  // the smaller samples force it.
  bool quick = false;
  // 1-based criterion indices to run; empty runs all eleven.
  std::vector<int> only;
};

// Runs the selected criteria in order with pinned seeds and tolerances.
// `progress` when true prints one status line per criterion to stderr as it
// completes.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       bool progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace regen::acceptance
