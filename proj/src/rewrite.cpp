#include "pathkit/rewrite.hpp"

namespace pathkit {

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "reverse"; }

namespace {

using Match = std::optional<Path>;

// The operand of trr/tlr is a rho whose term equals the adjacent endpoint;
// tau validity already guarantees that, so the patterns are purely structural.

Match rule_sr(const Path& p) {
  if (p.is(PathKind::Sigma) && p.inner().is(PathKind::Rho)) return p.inner();
  return std::nullopt;
}

Match rule_ss(const Path& p) {
  if (p.is(PathKind::Sigma) && p.inner().is(PathKind::Sigma)) return p.inner().inner();
  return std::nullopt;
}

Match rule_tr(const Path& p) {
  if (p.is(PathKind::Tau) && p.second().is(PathKind::Sigma) && p.second().inner() == p.first())
    return Path::rho(source(p.first()));
  return std::nullopt;
}

Match rule_tsr(const Path& p) {
  if (p.is(PathKind::Tau) && p.first().is(PathKind::Sigma) && p.first().inner() == p.second())
    return Path::rho(target(p.second()));
  return std::nullopt;
}

Match rule_trr(const Path& p) {
  if (p.is(PathKind::Tau) && p.second().is(PathKind::Rho)) return p.first();
  return std::nullopt;
}

Match rule_tlr(const Path& p) {
  if (p.is(PathKind::Tau) && p.first().is(PathKind::Rho)) return p.second();
  return std::nullopt;
}

Match rule_tt(const Path& p) {
  if (p.is(PathKind::Tau) && p.first().is(PathKind::Tau))
    return Path::tau(p.first().first(), Path::tau(p.first().second(), p.second()));
  return std::nullopt;
}

RuleSet make_standard() {
  RuleSet rs;
  rs.add({"sr", rule_sr});
  rs.add({"ss", rule_ss});
  rs.add({"tr", rule_tr});
  rs.add({"tsr", rule_tsr});
  rs.add({"trr", rule_trr});
  rs.add({"tlr", rule_tlr});
  rs.add({"tt", rule_tt});
  return rs;
}

/// Pre-order walk; `visit` returns false to stop the whole walk.
template <class Visit>
bool walk(const Path& p, PathPosition& here, Visit& visit) {
  if (!visit(p, here)) return false;
  switch (p.kind()) {
    case PathKind::Tau:
      here.steps.push_back(PathStep::First);
      if (!walk(p.first(), here, visit)) return false;
      here.steps.back() = PathStep::Second;
      if (!walk(p.second(), here, visit)) return false;
      here.steps.pop_back();
      return true;
    case PathKind::Sigma:
    case PathKind::Xi:
    case PathKind::Mu:
    case PathKind::Nu:
      here.steps.push_back(PathStep::Inner);
      if (!walk(p.inner(), here, visit)) return false;
      here.steps.pop_back();
      return true;
    default:
      return true;
  }
}

}  // namespace

const RuleSet& RuleSet::standard() {
  static const RuleSet rules = make_standard();
  return rules;
}

const RwRule* RuleSet::find(std::string_view name) const {
  for (const RwRule& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<RwRedex> rw_redexes(const Path& p, const RuleSet& rules) {
  std::vector<RwRedex> out;
  PathPosition here;
  auto visit = [&](const Path& sub, const PathPosition& pos) {
    for (const RwRule& r : rules.rules())
      if (r.apply(sub)) out.push_back({pos, r.name});
    return true;
  };
  walk(p, here, visit);
  return out;
}

std::optional<RwRedex> first_rw_redex(const Path& p, const RuleSet& rules) {
  std::optional<RwRedex> found;
  PathPosition here;
  auto visit = [&](const Path& sub, const PathPosition& pos) {
    for (const RwRule& r : rules.rules()) {
      if (r.apply(sub)) {
        found = RwRedex{pos, r.name};
        return false;
      }
    }
    return true;
  };
  walk(p, here, visit);
  return found;
}

Path rw_apply(const Path& p, const PathPosition& at, std::string_view rule, const RuleSet& rules) {
  const RwRule* r = rules.find(rule);
  if (!r) throw NoMatch("unknown rule " + std::string(rule));
  auto sub = subpath(p, at);
  if (!sub) throw NoMatch("invalid position " + at.to_string() + " for rule " + std::string(rule));
  auto result = r->apply(*sub);
  if (!result)
    throw NoMatch("rule " + std::string(rule) + " does not match at " + at.to_string());
  return replace_subpath(p, at, *result);
}

bool replays(const RwStepRecord& step, const RuleSet& rules) {
  const Path& redex = step.direction == Direction::Forward ? step.before : step.after;
  const Path& contractum = step.direction == Direction::Forward ? step.after : step.before;
  try {
    return rw_apply(redex, step.position, step.rule, rules) == contractum;
  } catch (const NoMatch&) {
    return false;
  }
}

RwNormalForm normalize_rw(const Path& p, std::size_t fuel, const RuleSet& rules) {
  if (fuel == 0) throw Error("fuel must be positive");
  RwNormalForm out{p, {}};
  while (auto redex = first_rw_redex(out.normal, rules)) {
    if (out.trace.size() == fuel) throw RwFuelExhausted(fuel);
    Path next = rw_apply(out.normal, redex->position, redex->rule, rules);
    out.trace.push_back(
        {std::move(redex->position), std::move(redex->rule), Direction::Forward, out.normal, next});
    out.normal = std::move(next);
  }
  return out;
}

Path rw_normal_form(const Path& p, std::size_t fuel, const RuleSet& rules) {
  if (fuel == 0) throw Error("fuel must be positive");
  Path cur = p;
  std::size_t steps = 0;
  while (auto redex = first_rw_redex(cur, rules)) {
    if (steps++ == fuel) throw RwFuelExhausted(fuel);
    cur = rw_apply(cur, redex->position, redex->rule, rules);
  }
  return cur;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? UINT64_MAX : r;
}

}  // namespace

std::uint64_t termination_measure(const Path& p) {
  switch (p.kind()) {
    case PathKind::Rho:
    case PathKind::Beta:
    case PathKind::Eta:
      return 1;
    case PathKind::Sigma: {
      std::uint64_t x = termination_measure(p.inner());
      return sat_add(sat_add(x, x), 1);
    }
    case PathKind::Tau: {
      std::uint64_t x = termination_measure(p.first());
      return sat_add(sat_add(sat_add(x, x), termination_measure(p.second())), 1);
    }
    case PathKind::Xi:
    case PathKind::Mu:
    case PathKind::Nu:
      return sat_add(termination_measure(p.inner()), 1);
  }
  return 1;
}

bool rw_eq(const Path& p, const Path& q, std::size_t fuel, const RuleSet& rules) {
  return rw_normal_form(p, fuel, rules) == rw_normal_form(q, fuel, rules);
}

}  // namespace pathkit
