#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace infgon {

enum class SuiteLevel { kQuick, kDesk };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First failure or a short summary.
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 11;

/// Runs one acceptance battery; ids are 1..kCriterionCount.
CriterionResult run_criterion(int id, SuiteLevel level);
std::vector<CriterionResult> run_acceptance(SuiteLevel level);

}  // namespace infgon
