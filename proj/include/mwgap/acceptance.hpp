#pragma once

// The acceptance suite: every quantitative claim of the library, checked at
// its stated scale and tolerance. Shared by the test driver and `mwgap ledger`.

#include <json.hpp>

#include <string>
#include <vector>

namespace mwgap {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

std::string criterion_name(int id);

/// Runs one criterion (1..kCriterionCount). `threads` = 0 uses every core.
CriterionResult run_criterion(int id, int threads = 0);

/// "PASS  3  Potential checks  (1.23 s)"
std::string format_result(const CriterionResult& r);

nlohmann::json result_to_json(const CriterionResult& r);

}  // namespace mwgap
