#pragma once

// Random terms, paths and rw-sequences for property campaigns. Every stream is
// a pure function of the configuration.

#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "pathkit/two_cell.hpp"

namespace pathkit {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t max_term_depth = 4;
  std::size_t max_path_depth = 4;
  /// Relative weight of each path constructor. sigma and tau default to 2,
  /// the rest to 1.
  std::map<PathKind, double> constructor_weights = default_weights();

  static std::map<PathKind, double> default_weights();
  /// Throws Error on a zero depth or a missing or non-positive weight.
  void validate() const;
};

/// Seed of sample `index` in a campaign seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

class Generator {
 public:
  explicit Generator(GeneratorConfig cfg);

  const GeneratorConfig& config() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }

  /// A term of depth at most `depth` that may use the `scope` innermost
  /// enclosing binders. Depth 1 yields a variable or the identity.
  Term term(std::size_t depth, std::uint32_t scope = 0);
  Term term() { return term(cfg_.max_term_depth); }

  /// A valid path of depth at most `depth` whose source (resp. target) is `t`.
  Path path_from(const Term& t, std::size_t depth);
  Path path_to(const Term& t, std::size_t depth);
  Path path() { return path_from(term(), cfg_.max_path_depth); }

  /// A random forward rw-step out of `p`, if it has a redex.
  std::optional<RwStepRecord> forward_step(const Path& p);
  /// A random reverse rw-step out of `p`: an expansion q with q rewriting to
  /// p in one step.
  std::optional<RwStepRecord> reverse_step(const Path& p);
  /// Up to `steps` random steps from `start`; each is reverse with
  /// probability `reverse_prob` (falling back to the other direction when
  /// none applies).
  RwSequence walk(const Path& start, std::size_t steps, double reverse_prob = 0.4);

  bool coin(double p = 0.5);
  std::size_t below(std::size_t n);

 private:
  PathKind pick(const std::vector<PathKind>& allowed);
  std::optional<Path> atomic_from(const Term& t, std::size_t depth);
  Path expansion_to(const Term& t);

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
};

Term gen_term(const GeneratorConfig& cfg);
Path gen_path(const GeneratorConfig& cfg, const std::optional<Term>& from = std::nullopt);

}  // namespace pathkit
