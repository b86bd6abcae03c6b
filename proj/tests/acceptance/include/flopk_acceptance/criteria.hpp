#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flopk::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no time limit
};

/// Runs the ten acceptance criteria in order. Criterion 9 also asserts
/// that no NonIntegralExpansion was raised anywhere in the run.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "[PASS] 4 ..." style line.
std::string format_line(const CriterionResult& result);

}  // namespace flopk::acceptance
