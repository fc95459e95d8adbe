#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#include "gerbeforge/execution.hpp"

namespace gf {

// out[i] = fn(i) for i in [0, count). In parallel mode the exception of the
// lowest failing index is rethrown after the loop.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t count, Execution execution, Fn&& fn) {
  std::vector<T> out(count);
  const auto n = static_cast<std::int64_t>(count);
  if (execution == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
    return out;
  }
  std::exception_ptr error;
  std::int64_t error_index = n;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gerbeforge_indexed_map_error)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace gf
