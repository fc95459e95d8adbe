#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gerbeforge/execution.hpp"
#include "gerbeforge/sweep.hpp"

namespace gf {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  Execution execution = Execution::parallel;
};

// One acceptance criterion: the laws it checked, a few named facts
// (counts, group names) and its wall time against the pinned budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<LawCheck> laws;
  std::vector<std::pair<std::string, std::string>> facts;
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const { return all_passed(laws) && seconds <= budget_seconds; }
};

// Criteria 1..8; the determinism criterion compares whole reports and lives
// with the report writer.
inline constexpr int computed_criteria = 8;
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

}  // namespace gf
