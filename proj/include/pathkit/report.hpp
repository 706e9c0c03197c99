#pragma once

// Outcome of a law-checking campaign and its JSON form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathkit {

inline constexpr std::string_view kReportSchema = "pathkit-report/1";

struct Failure {
  /// Structural path text of the instance.
  std::vector<std::string> inputs;
  std::string expected;
  std::string got;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckReport {
  std::string law;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::vector<Failure> failures;
  std::size_t oracle_confirmed = 0;
  std::size_t oracle_unknown = 0;
  std::optional<double> elapsed_ms;
  /// Law-specific counters, e.g. step-count statistics.
  std::map<std::string, double> stats;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Stable key order; elapsed time is written only when `include_timing`.
std::string to_json(const CheckReport& r, bool include_timing = false);
/// Throws Error on malformed input or a different schema tag.
CheckReport report_from_json(std::string_view text);

}  // namespace pathkit
