#include "pathkit/rw2.hpp"

#include <unordered_map>
#include <unordered_set>

namespace pathkit {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

bool rw2_eq_canonical(const RwSequence& a, const RwSequence& b) {
  if (!(a.boundary() == b.boundary())) return false;
  if (!(a.first() == b.first()) || !(a.last() == b.last())) return false;
  return cd2_canonicalize(a) == cd2_canonicalize(b);
}

namespace {

using Chain = std::vector<RwStepRecord>;

struct PairHash {
  std::size_t operator()(const std::pair<Path, Path>& p) const {
    return p.first.hash() * 31 + p.second.hash();
  }
};

class Search {
 public:
  Search(const OracleOptions& options, const RuleSet& rules)
      : options_(options), rules_(rules), prune_(&rules == &RuleSet::standard()) {}

  /// All single-move neighbours of `s`.
  std::vector<RwSequence> neighbours(const RwSequence& s) {
    std::vector<RwSequence> out;
    const auto& entries = s.entries();
    const auto& steps = s.steps();
    const std::size_t n = steps.size();

    for (std::size_t i = 0; i + 1 < n; ++i) {
      const PathPosition& p = steps[i].position;
      const PathPosition& q = steps[i + 1].position;
      if (!p.disjoint(q)) continue;
      Path mid = replace_subpath(entries[i], q, *subpath(entries[i + 2], q));
      std::vector<Path> e = entries;
      std::vector<RwStepRecord> st = steps;
      st[i] = {q, steps[i + 1].rule, steps[i + 1].direction, entries[i], mid};
      st[i + 1] = {p, steps[i].rule, steps[i].direction, mid, entries[i + 2]};
      e[i + 1] = std::move(mid);
      out.push_back(trusted_sequence(std::move(e), std::move(st), s.boundary()));
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
      const RwStepRecord& x = steps[i];
      const RwStepRecord& y = steps[i + 1];
      if (x.position == y.position && x.rule == y.rule && x.direction != y.direction &&
          entries[i] == entries[i + 2])
        out.push_back(splice(s, i, i + 2, {}));
    }

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n && j - i <= options_.segment_length; ++j) {
        if (steps[j - 1].direction != steps[i].direction) break;
        bool forward = steps[i].direction == Direction::Forward;
        const Path& from = forward ? entries[i] : entries[j];
        const Path& to = forward ? entries[j] : entries[i];
        for (const Chain& c : chains(from, to)) {
          Chain segment = forward ? c : reversed(c);
          if (same_segment(segment, steps, i, j)) continue;
          out.push_back(splice(s, i, j, std::move(segment)));
        }
      }
    }
    return out;
  }

 private:
  static Chain reversed(const Chain& c) {
    Chain out;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      out.push_back({it->position, it->rule, Direction::Reverse, it->after, it->before});
    return out;
  }

  static bool same_segment(const Chain& segment, const std::vector<RwStepRecord>& steps,
                           std::size_t i, std::size_t j) {
    if (segment.size() != j - i) return false;
    for (std::size_t k = 0; k < segment.size(); ++k) {
      const RwStepRecord& a = segment[k];
      const RwStepRecord& b = steps[i + k];
      if (!(a.position == b.position) || a.rule != b.rule || !(a.after == b.after)) return false;
    }
    return true;
  }

  /// Replaces steps [i, j) of `s` by `segment`, which runs from entries[i]
  /// to entries[j].
  static RwSequence splice(const RwSequence& s, std::size_t i, std::size_t j, Chain segment) {
    std::vector<Path> e(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(i) + 1);
    std::vector<RwStepRecord> st(s.steps().begin(), s.steps().begin() + static_cast<std::ptrdiff_t>(i));
    for (RwStepRecord& r : segment) {
      e.push_back(r.after);
      st.push_back(std::move(r));
    }
    e.insert(e.end(), s.entries().begin() + static_cast<std::ptrdiff_t>(j) + 1, s.entries().end());
    st.insert(st.end(), s.steps().begin() + static_cast<std::ptrdiff_t>(j), s.steps().end());
    return trusted_sequence(std::move(e), std::move(st), s.boundary());
  }

  /// Forward reductions from `from` to `to` of length 1..segment_length.
  const std::vector<Chain>& chains(const Path& from, const Path& to) {
    auto key = std::make_pair(from, to);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Chain> found;
    Chain current;
    std::uint64_t goal = prune_ ? termination_measure(to) : 0;
    extend(from, to, goal, current, found);
    return cache_.emplace(std::move(key), std::move(found)).first->second;
  }

  void extend(const Path& cur, const Path& to, std::uint64_t goal, Chain& current,
              std::vector<Chain>& found) {
    if (current.size() == options_.segment_length) return;
    for (const RwRedex& r : rw_redexes(cur, rules_)) {
      Path next = rw_apply(cur, r.position, r.rule, rules_);
      current.push_back({r.position, r.rule, Direction::Forward, cur, next});
      if (next == to) {
        found.push_back(current);
      } else if (!prune_ || termination_measure(next) > goal) {
        // The measure strictly decreases, so a path already at or below the
        // goal's measure can no longer reach it.
        extend(next, to, goal, current, found);
      }
      current.pop_back();
    }
  }

  const OracleOptions& options_;
  const RuleSet& rules_;
  bool prune_;
  std::unordered_map<std::pair<Path, Path>, std::vector<Chain>, PairHash> cache_;
};

}  // namespace

OracleResult rw2_oracle(const RwSequence& a, const RwSequence& b, const OracleOptions& options,
                        const RuleSet& rules) {
  if (!(a.boundary() == b.boundary()) || !(a.first() == b.first()) || !(a.last() == b.last()))
    return {Verdict::False, 0};
  if (a == b) return {Verdict::True, 1};

  Search search(options, rules);
  std::unordered_set<RwSequence, RwSequenceHash> seen[2] = {{a}, {b}};
  std::vector<RwSequence> frontier[2] = {{a}, {b}};
  std::size_t nodes = 2;

  // Cancellation has no inverse move, so one side running dry proves nothing
  // until the other side is exhausted as well.
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side = frontier[1].empty() || (!frontier[0].empty() && frontier[0].size() <= frontier[1].size())
                   ? 0
                   : 1;
    int other = 1 - side;
    std::vector<RwSequence> next;
    for (const RwSequence& s : frontier[side]) {
      for (RwSequence& n : search.neighbours(s)) {
        if (seen[other].count(n)) return {Verdict::True, nodes};
        if (!seen[side].insert(n).second) continue;
        if (++nodes > options.node_cap) return {Verdict::Unknown, nodes};
        next.push_back(std::move(n));
      }
    }
    frontier[side] = std::move(next);
  }
  return {Verdict::False, nodes};
}

Verdict rw2_eq(const RwSequence& a, const RwSequence& b, Rw2Mode mode,
               const OracleOptions& options) {
  if (mode == Rw2Mode::Canonical) return rw2_eq_canonical(a, b) ? Verdict::True : Verdict::False;
  return rw2_oracle(a, b, options).verdict;
}

}  // namespace pathkit
