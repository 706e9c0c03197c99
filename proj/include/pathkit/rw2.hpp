#pragma once

// Deciding equality of 2-cells. The canonical mode compares cd2 normal forms;
// the oracle mode runs a bounded bidirectional breadth-first search over
// single rw2-moves and can answer "unknown".

#include <cstdint>
#include <string_view>

#include "pathkit/two_cell.hpp"

namespace pathkit {

enum class Rw2Mode : std::uint8_t { Canonical, Oracle };
enum class Verdict : std::uint8_t { True, False, Unknown };

std::string_view to_string(Verdict v);

inline constexpr std::size_t kDefaultOracleCap = 50'000;

struct OracleOptions {
  /// Maximum number of distinct sequences generated across both directions.
  std::size_t node_cap = kDefaultOracleCap;
  /// Longest same-direction segment that a lifted-rule move may replace, and
  /// longest replacement it may insert.
  std::size_t segment_length = 3;
};

struct OracleResult {
  Verdict verdict;
  std::size_t nodes;
};

/// Same boundary, same first and last entries, equal cd2 normal forms.
bool rw2_eq_canonical(const RwSequence& a, const RwSequence& b);

/// Moves, applicable anywhere in a sequence:
///   - cd2: swap neighbouring steps at disjoint positions;
///   - cancel an adjacent inverse pair (insertion is covered by searching
///     from both ends);
///   - lifted rules: replace a same-direction segment by another reduction
///     between the same two paths.
/// True when the two searches meet, False when both move sets are exhausted,
/// Unknown when the node cap is hit first.
OracleResult rw2_oracle(const RwSequence& a, const RwSequence& b, const OracleOptions& options = {},
                        const RuleSet& rules = RuleSet::standard());

Verdict rw2_eq(const RwSequence& a, const RwSequence& b, Rw2Mode mode,
               const OracleOptions& options = {});

}  // namespace pathkit
