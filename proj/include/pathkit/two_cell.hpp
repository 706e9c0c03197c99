#pragma once

// Two-dimensional layer: rw-sequences between paths with the same endpoints,
// their vertical and horizontal composition, reversal, and the cd2 quotient
// (independent steps inside a tau commute).

#include <cstdint>
#include <string>
#include <vector>

#include "pathkit/rewrite.hpp"

namespace pathkit {

class SequenceError : public Error {
 public:
  enum class Kind : std::uint8_t {
    Empty,
    LengthMismatch,
    StepMismatch,
    EndpointDrift,
    JunctionMismatch,
    Composability,
    ShapeMismatch,
  };
  SequenceError(Kind kind, std::string what) : Error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// R0 ... Rn together with the n steps relating neighbours. Always valid:
/// every entry has the same endpoints and every step replays.
class RwSequence {
 public:
  /// The identity 2-cell on p (no steps).
  static RwSequence identity(Path p);

  const std::vector<Path>& entries() const { return entries_; }
  const std::vector<RwStepRecord>& steps() const { return steps_; }
  const Path& first() const { return entries_.front(); }
  const Path& last() const { return entries_.back(); }
  std::size_t length() const { return steps_.size(); }
  bool is_identity() const { return steps_.empty(); }
  /// The common endpoints (a, b) of every entry.
  const Endpoints& boundary() const { return boundary_; }

  std::size_t hash() const;

  /// Same entries (up to alpha) and the same step positions, rules and
  /// directions.
  friend bool operator==(const RwSequence& a, const RwSequence& b);

 private:
  RwSequence(std::vector<Path> entries, std::vector<RwStepRecord> steps, Endpoints boundary)
      : entries_(std::move(entries)), steps_(std::move(steps)), boundary_(std::move(boundary)) {}

  friend RwSequence mk_sequence(std::vector<Path>, std::vector<RwStepRecord>, const RuleSet&);
  friend RwSequence trusted_sequence(std::vector<Path>, std::vector<RwStepRecord>, Endpoints);

  std::vector<Path> entries_;
  std::vector<RwStepRecord> steps_;
  Endpoints boundary_;
};

struct RwSequenceHash {
  std::size_t operator()(const RwSequence& s) const { return s.hash(); }
};

/// Validating constructor: step i must take entries[i] to entries[i+1] by a
/// genuine rule application in its stated direction.
RwSequence mk_sequence(std::vector<Path> entries, std::vector<RwStepRecord> steps,
                       const RuleSet& rules = RuleSet::standard());

/// Builds a sequence from records that are correct by construction. Only
/// used on the library's internal fast paths.
RwSequence trusted_sequence(std::vector<Path> entries, std::vector<RwStepRecord> steps,
                            Endpoints boundary);

/// Builds the sequence whose step list is `steps`, starting at steps[0].before
/// (or at `start` when there are none).
RwSequence sequence_of_steps(const Path& start, std::vector<RwStepRecord> steps,
                             const RuleSet& rules = RuleSet::standard());

/// Finds, for each neighbouring pair, a single forward or reverse step.
RwSequence infer_sequence(std::vector<Path> entries, const RuleSet& rules = RuleSet::standard());

/// Vertical composition: concatenation sharing the junction entry.
RwSequence vcomp(const RwSequence& a, const RwSequence& b);
RwSequence reverse2(const RwSequence& a);

/// Horizontal composition of alpha (between a and b) with theta (between b
/// and c): alpha's steps run inside the first component of tau while theta
/// rests at its first entry, then theta's steps inside the second component.
RwSequence hcomp(const RwSequence& alpha, const RwSequence& theta);

/// Moves a single step under a position prefix.
RwStepRecord rebase(const RwStepRecord& step, const PathPosition& prefix, const Path& before,
                    const Path& after);

/// Normal form modulo cancellation of adjacent inverse pairs and cd2 swaps of
/// adjacent steps at disjoint positions (lexicographically smaller position
/// first). Preserves the first and last entries.
RwSequence cd2_canonicalize(const RwSequence& a);

enum class CoherenceKind : std::uint8_t { Assoc, LeftUnit, RightUnit };

/// Single-step coherence cells:
///   assoc      tau(x, tau(y, z))  =>  tau(tau(x, y), z)   (tt, reversed)
///   left_unit  tau(x, rho)        =>  x                   (trr)
///   right_unit tau(rho, x)        =>  x                   (tlr)
RwSequence coherence_component(CoherenceKind kind, const Path& at);

std::string describe(const RwStepRecord& step);
std::string print_sequence(const RwSequence& s, PathStyle style = PathStyle::Structural);

}  // namespace pathkit
