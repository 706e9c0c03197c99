#pragma once

// Index-parallel map used by the campaigns. The serial path is the reference;
// both produce results in index order.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace pathkit {

enum class Execution : std::uint8_t { Serial, Parallel };

template <class Result, class Fn>
std::vector<Result> run_indexed(std::size_t n, Execution exec, Fn&& fn) {
  std::vector<Result> out(n);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = fn(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace pathkit
