#pragma once

// Rewriting between computational paths. The standard rule set holds the
// seven redundancy-eliminating rules sr, ss, tr, tsr, trr, tlr and tt; further
// rules can be registered on a RuleSet value.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathkit/path.hpp"

namespace pathkit {

enum class Direction : std::uint8_t { Forward, Reverse };

inline Direction flip(Direction d) {
  return d == Direction::Forward ? Direction::Reverse : Direction::Forward;
}
std::string_view to_string(Direction d);

struct RwRule {
  std::string name;
  /// Contractum when the rule's pattern matches at the root, else nullopt.
  /// Must preserve endpoints.
  std::function<std::optional<Path>(const Path&)> apply;
};

class RuleSet {
 public:
  /// sr, ss, tr, tsr, trr, tlr, tt, in that priority order.
  static const RuleSet& standard();

  void add(RwRule rule) { rules_.push_back(std::move(rule)); }
  const std::vector<RwRule>& rules() const { return rules_; }
  const RwRule* find(std::string_view name) const;

 private:
  std::vector<RwRule> rules_;
};

struct RwRedex {
  PathPosition position;
  std::string rule;
  friend bool operator==(const RwRedex&, const RwRedex&) = default;
};

/// All (position, rule) matches, pre-order over positions and rule priority
/// order within a position.
std::vector<RwRedex> rw_redexes(const Path& p, const RuleSet& rules = RuleSet::standard());
std::optional<RwRedex> first_rw_redex(const Path& p, const RuleSet& rules = RuleSet::standard());

class NoMatch : public Error {
 public:
  using Error::Error;
};

Path rw_apply(const Path& p, const PathPosition& at, std::string_view rule,
              const RuleSet& rules = RuleSet::standard());

/// One directed rule application. Forward: before rewrites to after.
/// Reverse: after rewrites to before.
struct RwStepRecord {
  PathPosition position;
  std::string rule;
  Direction direction;
  Path before;
  Path after;
};

/// Checks that `step` is a genuine application of its rule.
bool replays(const RwStepRecord& step, const RuleSet& rules = RuleSet::standard());

inline constexpr std::size_t kDefaultPathFuel = 100'000;

class RwFuelExhausted : public FuelExhausted {
 public:
  explicit RwFuelExhausted(std::size_t steps)
      : FuelExhausted("path normalization ran out of fuel after " + std::to_string(steps) +
                      " steps") {}
};

struct RwNormalForm {
  Path normal;
  std::vector<RwStepRecord> trace;
};

/// Rewrites with the first redex in rw_redexes order until none is left.
RwNormalForm normalize_rw(const Path& p, std::size_t fuel = kDefaultPathFuel,
                          const RuleSet& rules = RuleSet::standard());
Path rw_normal_form(const Path& p, std::size_t fuel = kDefaultPathFuel,
                    const RuleSet& rules = RuleSet::standard());

/// Polynomial interpretation that strictly decreases along every step of the
/// standard rules: rho, beta, eta = 1; sigma(x) = 2x + 1; tau(x, y) = 2x + y + 1;
/// xi, mu, nu(x) = x + 1. Saturates at UINT64_MAX.
std::uint64_t termination_measure(const Path& p);

/// Normal forms compared up to alpha.
bool rw_eq(const Path& p, const Path& q, std::size_t fuel = kDefaultPathFuel,
           const RuleSet& rules = RuleSet::standard());

}  // namespace pathkit
