#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "gerbeforge/execution.hpp"

namespace gf {

// Outcome of checking one identity over a family of cases.
struct LawCheck {
  std::string law;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // lowest failing case index wins

  bool passed() const { return failures == 0; }
};

inline bool all_passed(const std::vector<LawCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

// Runs check(i) for i in [0, count). check returns a description on failure.
// The parallel path yields the same LawCheck as the serial one.
template <class Check>
LawCheck sweep(std::string law, std::uint64_t count, Execution execution, Check&& check) {
  LawCheck out;
  out.law = std::move(law);
  out.cases = count;
  std::uint64_t failures = 0;
  std::uint64_t first = count;
  std::string first_message;

  auto run = [&check](std::uint64_t i) -> std::optional<std::string> {
    try {
      return check(i);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };

  if (execution == Execution::serial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (auto msg = run(i)) {
        ++failures;
        if (first == count) {
          first = i;
          first_message = std::move(*msg);
        }
      }
    }
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
    for (std::int64_t i = 0; i < n; ++i) {
      if (auto msg = run(static_cast<std::uint64_t>(i))) {
        ++failures;
#pragma omp critical(gerbeforge_sweep_first)
        if (static_cast<std::uint64_t>(i) < first) {
          first = static_cast<std::uint64_t>(i);
          first_message = std::move(*msg);
        }
      }
    }
  }
  out.failures = failures;
  if (failures > 0) out.first_failure = "case " + std::to_string(first) + ": " + first_message;
  return out;
}

}  // namespace gf
