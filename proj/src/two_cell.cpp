#include "pathkit/two_cell.hpp"

#include <algorithm>

namespace pathkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool same_meta(const RwStepRecord& a, const RwStepRecord& b) {
  return a.position == b.position && a.rule == b.rule && a.direction == b.direction;
}

RwStepRecord inverted(const RwStepRecord& s) {
  return {s.position, s.rule, flip(s.direction), s.after, s.before};
}

}  // namespace

RwSequence RwSequence::identity(Path p) {
  Endpoints e = endpoints(p);
  return RwSequence({std::move(p)}, {}, std::move(e));
}

std::size_t RwSequence::hash() const {
  std::size_t h = entries_.size();
  for (const Path& p : entries_) h = mix(h, p.hash());
  for (const RwStepRecord& s : steps_) {
    h = mix(h, std::hash<std::string>{}(s.rule));
    h = mix(h, static_cast<std::size_t>(s.direction));
    for (PathStep st : s.position.steps) h = mix(h, static_cast<std::size_t>(st) + 1);
  }
  return h;
}

bool operator==(const RwSequence& a, const RwSequence& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.steps_.size(); ++i)
    if (!same_meta(a.steps_[i], b.steps_[i])) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

RwSequence mk_sequence(std::vector<Path> entries, std::vector<RwStepRecord> steps,
                       const RuleSet& rules) {
  using K = SequenceError::Kind;
  if (entries.empty()) throw SequenceError(K::Empty, "an rw-sequence needs at least one entry");
  if (steps.size() + 1 != entries.size())
    throw SequenceError(K::LengthMismatch, std::to_string(entries.size()) + " entries but " +
                                               std::to_string(steps.size()) + " steps");
  Endpoints boundary = endpoints(entries.front());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const RwStepRecord& s = steps[i];
    if (!(s.before == entries[i]))
      throw SequenceError(K::StepMismatch, "step " + std::to_string(i) + ": expected before " +
                                               print_path(entries[i]) + ", found " +
                                               print_path(s.before));
    if (!(s.after == entries[i + 1]))
      throw SequenceError(K::StepMismatch, "step " + std::to_string(i) + ": expected after " +
                                               print_path(entries[i + 1]) + ", found " +
                                               print_path(s.after));
    if (!replays(s, rules))
      throw SequenceError(K::StepMismatch, "step " + std::to_string(i) + ": " + describe(s) +
                                               " does not relate " + print_path(s.before) +
                                               " and " + print_path(s.after));
    if (!(endpoints(entries[i + 1]) == boundary))
      throw SequenceError(K::EndpointDrift,
                          "entry " + std::to_string(i + 1) + " changes the endpoints");
  }
  return RwSequence(std::move(entries), std::move(steps), std::move(boundary));
}

RwSequence trusted_sequence(std::vector<Path> entries, std::vector<RwStepRecord> steps,
                            Endpoints boundary) {
  return RwSequence(std::move(entries), std::move(steps), std::move(boundary));
}

RwSequence sequence_of_steps(const Path& start, std::vector<RwStepRecord> steps,
                             const RuleSet& rules) {
  std::vector<Path> entries{steps.empty() ? start : steps.front().before};
  for (const RwStepRecord& s : steps) entries.push_back(s.after);
  return mk_sequence(std::move(entries), std::move(steps), rules);
}

RwSequence infer_sequence(std::vector<Path> entries, const RuleSet& rules) {
  std::vector<RwStepRecord> steps;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const Path& a = entries[i];
    const Path& b = entries[i + 1];
    std::optional<RwStepRecord> found;
    for (const RwRedex& r : rw_redexes(a, rules)) {
      if (rw_apply(a, r.position, r.rule, rules) == b) {
        found = RwStepRecord{r.position, r.rule, Direction::Forward, a, b};
        break;
      }
    }
    if (!found) {
      for (const RwRedex& r : rw_redexes(b, rules)) {
        if (rw_apply(b, r.position, r.rule, rules) == a) {
          found = RwStepRecord{r.position, r.rule, Direction::Reverse, a, b};
          break;
        }
      }
    }
    if (!found)
      throw SequenceError(SequenceError::Kind::StepMismatch,
                          "no single rw-step relates entries " + std::to_string(i) + " and " +
                              std::to_string(i + 1));
    steps.push_back(std::move(*found));
  }
  return mk_sequence(std::move(entries), std::move(steps), rules);
}

RwSequence vcomp(const RwSequence& a, const RwSequence& b) {
  if (!(a.last() == b.first()))
    throw SequenceError(SequenceError::Kind::JunctionMismatch,
                        "vertical composition: " + print_path(a.last()) + " does not match " +
                            print_path(b.first()));
  std::vector<Path> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin() + 1, b.entries().end());
  std::vector<RwStepRecord> steps = a.steps();
  steps.insert(steps.end(), b.steps().begin(), b.steps().end());
  return trusted_sequence(std::move(entries), std::move(steps), a.boundary());
}

RwSequence reverse2(const RwSequence& a) {
  std::vector<Path> entries(a.entries().rbegin(), a.entries().rend());
  std::vector<RwStepRecord> steps;
  steps.reserve(a.length());
  for (auto it = a.steps().rbegin(); it != a.steps().rend(); ++it) steps.push_back(inverted(*it));
  return trusted_sequence(std::move(entries), std::move(steps), a.boundary());
}

RwStepRecord rebase(const RwStepRecord& step, const PathPosition& prefix, const Path& before,
                    const Path& after) {
  return {prefix.join(step.position), step.rule, step.direction, before, after};
}

RwSequence hcomp(const RwSequence& alpha, const RwSequence& theta) {
  if (!(alpha.boundary().target == theta.boundary().source))
    throw SequenceError(SequenceError::Kind::Composability,
                        "horizontal composition: target " + print_term(alpha.boundary().target) +
                            " does not match source " + print_term(theta.boundary().source));
  const PathPosition first{{PathStep::First}};
  const PathPosition second{{PathStep::Second}};
  std::vector<Path> entries;
  std::vector<RwStepRecord> steps;
  const Path& theta0 = theta.first();
  entries.push_back(Path::tau(alpha.first(), theta0));
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    Path next = Path::tau(alpha.entries()[i + 1], theta0);
    steps.push_back(rebase(alpha.steps()[i], first, entries.back(), next));
    entries.push_back(std::move(next));
  }
  const Path& alpha_n = alpha.last();
  for (std::size_t j = 0; j < theta.length(); ++j) {
    Path next = Path::tau(alpha_n, theta.entries()[j + 1]);
    steps.push_back(rebase(theta.steps()[j], second, entries.back(), next));
    entries.push_back(std::move(next));
  }
  Endpoints boundary{alpha.boundary().source, theta.boundary().target};
  return trusted_sequence(std::move(entries), std::move(steps), std::move(boundary));
}

RwSequence cd2_canonicalize(const RwSequence& a) {
  std::vector<Path> entries = a.entries();
  std::vector<RwStepRecord> steps = a.steps();
  bool changed = true;
  while (changed) {
    changed = false;
    // Inverse pairs: the same rule at the same position, there and back.
    for (std::size_t i = 0; i + 1 < steps.size();) {
      const RwStepRecord& x = steps[i];
      const RwStepRecord& y = steps[i + 1];
      if (x.position == y.position && x.rule == y.rule && x.direction != y.direction &&
          entries[i] == entries[i + 2]) {
        steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i),
                    steps.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                      entries.begin() + static_cast<std::ptrdiff_t>(i) + 3);
        changed = true;
        if (i > 0) --i;
        continue;
      }
      ++i;
    }
    // cd2: independent neighbours move into position order.
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      const PathPosition& p = steps[i].position;
      const PathPosition& q = steps[i + 1].position;
      if (!(q < p) || !p.disjoint(q)) continue;
      Path mid = replace_subpath(entries[i], q, *subpath(entries[i + 2], q));
      RwStepRecord moved_first{q, steps[i + 1].rule, steps[i + 1].direction, entries[i], mid};
      RwStepRecord moved_second{p, steps[i].rule, steps[i].direction, mid, entries[i + 2]};
      steps[i] = std::move(moved_first);
      steps[i + 1] = std::move(moved_second);
      entries[i + 1] = std::move(mid);
      changed = true;
    }
  }
  return trusted_sequence(std::move(entries), std::move(steps), a.boundary());
}

RwSequence coherence_component(CoherenceKind kind, const Path& at) {
  using K = SequenceError::Kind;
  Endpoints boundary = endpoints(at);
  const PathPosition root;
  switch (kind) {
    case CoherenceKind::Assoc: {
      if (!at.is(PathKind::Tau) || !at.second().is(PathKind::Tau))
        throw SequenceError(K::ShapeMismatch, "assoc needs tau(x, tau(y, z)), got " + print_path(at));
      Path out = Path::tau(Path::tau(at.first(), at.second().first()), at.second().second());
      RwStepRecord step{root, "tt", Direction::Reverse, at, out};
      return trusted_sequence({at, out}, {std::move(step)}, std::move(boundary));
    }
    case CoherenceKind::LeftUnit: {
      if (!at.is(PathKind::Tau) || !at.second().is(PathKind::Rho))
        throw SequenceError(K::ShapeMismatch, "left unit needs tau(x, rho), got " + print_path(at));
      RwStepRecord step{root, "trr", Direction::Forward, at, at.first()};
      return trusted_sequence({at, at.first()}, {std::move(step)}, std::move(boundary));
    }
    case CoherenceKind::RightUnit: {
      if (!at.is(PathKind::Tau) || !at.first().is(PathKind::Rho))
        throw SequenceError(K::ShapeMismatch, "right unit needs tau(rho, x), got " + print_path(at));
      RwStepRecord step{root, "tlr", Direction::Forward, at, at.second()};
      return trusted_sequence({at, at.second()}, {std::move(step)}, std::move(boundary));
    }
  }
  throw SequenceError(K::ShapeMismatch, "unknown coherence kind");
}

std::string describe(const RwStepRecord& step) {
  return step.rule + "@" + step.position.to_string() +
         (step.direction == Direction::Forward ? "" : " (reversed)");
}

std::string print_sequence(const RwSequence& s, PathStyle style) {
  std::string out = print_path(s.first(), style);
  for (std::size_t i = 0; i < s.length(); ++i) {
    out += "\n  ";
    out += s.steps()[i].direction == Direction::Forward ? "|> " : "<| ";
    out += s.steps()[i].rule + " @ " + s.steps()[i].position.to_string() + "\n";
    out += print_path(s.entries()[i + 1], style);
  }
  return out;
}

}  // namespace pathkit
