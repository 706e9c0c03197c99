#include "pathkit/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace pathkit {

GeneratorConfig CampaignOptions::generator(std::size_t index) const {
  GeneratorConfig cfg;
  cfg.seed = sample_seed(seed, index);
  cfg.max_term_depth = term_depth;
  cfg.max_path_depth = depth;
  return cfg;
}

namespace {

struct Outcome {
  std::vector<Failure> failures;
  std::optional<Verdict> oracle;
  /// Summed across samples, except keys starting with "max_" which keep the
  /// maximum.
  std::map<std::string, double> metrics;
};

using SampleFn = std::function<Outcome(std::size_t, Generator&)>;

CheckReport campaign(std::string law, const CampaignOptions& opts, const SampleFn& fn) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes = run_indexed<Outcome>(opts.samples, opts.execution, [&](std::size_t i) {
    Generator g(opts.generator(i));
    return fn(i, g);
  });
  CheckReport r;
  r.law = std::move(law);
  r.samples = opts.samples;
  r.seed = opts.seed;
  r.depth = opts.depth;
  for (Outcome& o : outcomes) {
    for (Failure& f : o.failures) r.failures.push_back(std::move(f));
    if (o.oracle == Verdict::True) ++r.oracle_confirmed;
    if (o.oracle == Verdict::Unknown) ++r.oracle_unknown;
    for (const auto& [k, v] : o.metrics) {
      auto [it, fresh] = r.stats.emplace(k, v);
      if (fresh) continue;
      it->second = k.rfind("max_", 0) == 0 ? std::max(it->second, v) : it->second + v;
    }
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string show(const Path& p) { return print_path(p); }

std::string show_nf(const Path& p, std::size_t fuel) {
  try {
    return show(rw_normal_form(p, fuel));
  } catch (const FuelExhausted&) {
    return "<fuel exhausted>";
  }
}

/// A chain s: a -> b, then paths continuing from each target.
std::vector<Path> composable(Generator& g, std::size_t count, std::size_t depth) {
  std::vector<Path> out{g.path_from(g.term(), depth)};
  while (out.size() < count) out.push_back(g.path_from(target(out.back()), depth));
  return out;
}

std::vector<std::string> shown(const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const Path& p : ps) out.push_back(show(p));
  return out;
}

Outcome groupoid_sample(Generator& g, std::size_t depth, std::size_t fuel) {
  std::vector<Path> triple = composable(g, 3, depth);
  const Path& s = triple[0];
  const Path& r = triple[1];
  const Path& t = triple[2];
  Endpoints e = endpoints(s);
  Outcome out;
  auto law = [&](const char* name, const Path& lhs, const Path& rhs) {
    bool ok = false;
    try {
      ok = rw_eq(lhs, rhs, fuel);
    } catch (const FuelExhausted&) {
    }
    if (!ok)
      out.failures.push_back({shown(triple), std::string(name) + ": " + show(lhs) + " =rw " + show(rhs),
                              show_nf(lhs, fuel) + " vs " + show_nf(rhs, fuel)});
  };
  law("assoc", Path::tau(Path::tau(s, r), t), Path::tau(s, Path::tau(r, t)));
  law("left identity", Path::tau(Path::rho(e.source), s), s);
  law("right identity", Path::tau(s, Path::rho(e.target)), s);
  law("right inverse", Path::tau(s, Path::sigma(s)), Path::rho(e.source));
  law("left inverse", Path::tau(Path::sigma(s), s), Path::rho(e.target));
  return out;
}

std::vector<std::string> shown_cells(std::initializer_list<const RwSequence*> cells) {
  std::vector<std::string> out;
  for (const RwSequence* c : cells) out.push_back(print_sequence(*c));
  return out;
}

/// Canonical verdict, then the oracle when asked. A canonical mismatch fails
/// only when `canonical_required`; an oracle False always fails and Unknown
/// is counted separately.
void judge_cells(Outcome& out, const RwSequence& a, const RwSequence& b,
                 std::vector<std::string> inputs, bool use_oracle, bool canonical_required,
                 const OracleOptions& oracle) {
  bool canonical = rw2_eq_canonical(a, b);
  out.metrics["canonical_equal"] = canonical ? 1 : 0;
  if (!use_oracle) {
    if (!canonical && canonical_required)
      out.failures.push_back({std::move(inputs), "rw2-equal (canonical)", "distinct cd2 normal forms"});
    return;
  }
  OracleResult res = rw2_oracle(a, b, oracle);
  out.oracle = res.verdict;
  out.metrics["max_oracle_nodes"] = static_cast<double>(res.nodes);
  if (res.verdict == Verdict::False || (canonical_required && !canonical))
    out.failures.push_back({std::move(inputs), "rw2-equal",
                            "canonical " + std::string(canonical ? "true" : "false") + ", oracle " +
                                std::string(to_string(res.verdict))});
}

Outcome interchange_outcome(const RwSequence& alpha, const RwSequence& theta,
                            const RwSequence& chi, const RwSequence& phi, bool use_oracle,
                            const OracleOptions& oracle) {
  RwSequence lhs = hcomp(vcomp(alpha, chi), vcomp(theta, phi));
  RwSequence rhs = vcomp(hcomp(alpha, theta), hcomp(chi, phi));
  Outcome out;
  judge_cells(out, lhs, rhs, shown_cells({&alpha, &theta, &chi, &phi}), use_oracle, true, oracle);
  return out;
}

Outcome routes_outcome(const CellRoutes& routes, std::vector<std::string> inputs, bool use_oracle,
                       const OracleOptions& oracle) {
  Outcome out;
  for (const RwSequence* route : {&routes.left, &routes.right}) {
    if (!(route->last() == routes.expected_end)) {
      out.failures.push_back({inputs, show(routes.expected_end), show(route->last())});
      return out;
    }
  }
  judge_cells(out, routes.left, routes.right, std::move(inputs), use_oracle, false, oracle);
  return out;
}

CheckReport single(std::string law, Outcome o) {
  CheckReport r;
  r.law = std::move(law);
  r.samples = 1;
  r.failures = std::move(o.failures);
  r.oracle_confirmed = o.oracle == Verdict::True ? 1 : 0;
  r.oracle_unknown = o.oracle == Verdict::Unknown ? 1 : 0;
  r.stats = std::move(o.metrics);
  return r;
}

OracleOptions oracle_options(const CampaignOptions& opts) {
  OracleOptions o;
  o.node_cap = opts.oracle_cap;
  return o;
}

}  // namespace

CheckReport check_groupoid_laws(std::size_t samples, std::uint64_t seed, std::size_t depth) {
  CampaignOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.depth = depth;
  return check_groupoid_laws(opts);
}

CheckReport check_groupoid_laws(const CampaignOptions& opts) {
  return campaign("groupoid", opts, [&](std::size_t, Generator& g) {
    return groupoid_sample(g, opts.depth, opts.fuel);
  });
}

CheckReport check_interchange(const RwSequence& alpha, const RwSequence& theta,
                              const RwSequence& chi, const RwSequence& phi, Rw2Mode mode,
                              const OracleOptions& oracle) {
  return single("interchange",
                interchange_outcome(alpha, theta, chi, phi, mode == Rw2Mode::Oracle, oracle));
}

CellRoutes pentagon_routes(const Path& s, const Path& r, const Path& p, const Path& u) {
  using K = CoherenceKind;
  Path start = Path::tau(s, Path::tau(r, Path::tau(p, u)));
  RwSequence a1 = coherence_component(K::Assoc, start);
  RwSequence left = vcomp(a1, coherence_component(K::Assoc, a1.last()));

  RwSequence inner = hcomp(RwSequence::identity(s),
                           coherence_component(K::Assoc, Path::tau(r, Path::tau(p, u))));
  RwSequence middle = coherence_component(K::Assoc, inner.last());
  RwSequence outer = hcomp(coherence_component(K::Assoc, middle.last().first()),
                           RwSequence::identity(u));
  RwSequence right = vcomp(vcomp(inner, middle), outer);
  return {std::move(left), std::move(right), Path::tau(Path::tau(Path::tau(s, r), p), u)};
}

CellRoutes triangle_routes(const Path& r, const Path& s) {
  using K = CoherenceKind;
  Path rho_b = Path::rho(target(s));
  Path start = Path::tau(s, Path::tau(rho_b, r));
  RwSequence assoc = coherence_component(K::Assoc, start);
  RwSequence unit = hcomp(coherence_component(K::LeftUnit, Path::tau(s, rho_b)),
                          RwSequence::identity(r));
  RwSequence left = vcomp(assoc, unit);
  RwSequence right = hcomp(RwSequence::identity(s),
                           coherence_component(K::RightUnit, Path::tau(rho_b, r)));
  return {std::move(left), std::move(right), Path::tau(s, r)};
}

CheckReport check_pentagon(const Path& s, const Path& r, const Path& p, const Path& u,
                           bool use_oracle, const OracleOptions& oracle) {
  return single("pentagon", routes_outcome(pentagon_routes(s, r, p, u), shown({s, r, p, u}),
                                           use_oracle, oracle));
}

CheckReport check_triangle(const Path& r, const Path& s, bool use_oracle,
                           const OracleOptions& oracle) {
  return single("triangle",
                routes_outcome(triangle_routes(r, s), shown({s, r}), use_oracle, oracle));
}

CheckReport run_interchange(const CampaignOptions& opts) {
  OracleOptions oracle = oracle_options(opts);
  return campaign("interchange", opts, [&](std::size_t i, Generator& g) {
    std::vector<Path> pair = composable(g, 2, opts.depth);
    RwSequence alpha = g.walk(pair[0], g.below(3));
    RwSequence chi = g.walk(alpha.last(), g.below(3));
    RwSequence theta = g.walk(pair[1], g.below(3));
    RwSequence phi = g.walk(theta.last(), g.below(3));
    return interchange_outcome(alpha, theta, chi, phi, opts.oracle_on(i), oracle);
  });
}

CheckReport run_pentagon(const CampaignOptions& opts) {
  OracleOptions oracle = oracle_options(opts);
  return campaign("pentagon", opts, [&](std::size_t i, Generator& g) {
    std::vector<Path> ps = composable(g, 4, opts.depth);
    return routes_outcome(pentagon_routes(ps[0], ps[1], ps[2], ps[3]), shown(ps), opts.oracle_on(i),
                          oracle);
  });
}

CheckReport run_triangle(const CampaignOptions& opts) {
  OracleOptions oracle = oracle_options(opts);
  return campaign("triangle", opts, [&](std::size_t i, Generator& g) {
    std::vector<Path> ps = composable(g, 2, opts.depth);
    return routes_outcome(triangle_routes(ps[1], ps[0]), shown(ps), opts.oracle_on(i), oracle);
  });
}

CheckReport run_confluence(const CampaignOptions& opts) {
  return campaign("confluence", opts, [&](std::size_t, Generator& g) {
    Path p = g.path();
    Outcome out;
    Path expected = rw_normal_form(p, opts.fuel);
    std::set<std::string> distinct{show(expected)};
    for (std::size_t k = 0; k < opts.strategies; ++k) {
      Path cur = p;
      for (std::size_t steps = 0;; ++steps) {
        std::vector<RwRedex> redexes = rw_redexes(cur);
        if (redexes.empty()) break;
        if (steps == opts.fuel) throw RwFuelExhausted(steps);
        const RwRedex& r = redexes[g.below(redexes.size())];
        cur = rw_apply(cur, r.position, r.rule);
      }
      if (distinct.insert(show(cur)).second)
        out.failures.push_back({{show(p)}, show(expected), show(cur)});
    }
    out.metrics["nonconfluent_paths"] = distinct.size() > 1 ? 1 : 0;
    out.metrics["max_distinct_normal_forms"] = static_cast<double>(distinct.size());
    return out;
  });
}

CheckReport run_termination(const CampaignOptions& opts) {
  CheckReport r = campaign("termination", opts, [&](std::size_t, Generator& g) {
    Path p = g.path();
    Outcome out;
    out.metrics["max_path_size"] = static_cast<double>(p.size());
    try {
      RwNormalForm nf = normalize_rw(p, opts.fuel);
      double steps = static_cast<double>(nf.trace.size());
      out.metrics["steps_total"] = steps;
      out.metrics["max_steps"] = steps;
      for (const RwStepRecord& s : nf.trace) {
        if (termination_measure(s.after) >= termination_measure(s.before)) {
          out.failures.push_back({{show(p)}, "measure decreases at " + describe(s),
                                  show(s.before) + " -> " + show(s.after)});
          break;
        }
      }
    } catch (const FuelExhausted&) {
      out.failures.push_back({{show(p)}, "normal form within fuel", "fuel exhausted"});
    }
    return out;
  });
  if (r.samples > 0) r.stats["mean_steps"] = r.stats["steps_total"] / static_cast<double>(r.samples);
  return r;
}

CheckReport run_equivalence(const CampaignOptions& opts) {
  return campaign("equivalence", opts, [&](std::size_t, Generator& g) {
    RwSequence family = g.walk(g.path(), 6);
    const auto& members = family.entries();
    std::vector<Path> triple;
    for (int k = 0; k < 3; ++k) triple.push_back(members[g.below(members.size())]);
    const Path& p = triple[0];
    const Path& q = triple[1];
    const Path& r = triple[2];
    Outcome out;
    auto fail = [&](std::string expected, std::string got) {
      out.failures.push_back({shown(triple), std::move(expected), std::move(got)});
    };
    bool pq = rw_eq(p, q, opts.fuel);
    bool qp = rw_eq(q, p, opts.fuel);
    bool qr = rw_eq(q, r, opts.fuel);
    bool pr = rw_eq(p, r, opts.fuel);
    if (!rw_eq(p, p, opts.fuel)) fail("reflexive", "rw_eq(p, p) false");
    if (pq != qp) fail("symmetric", "rw_eq(p, q) differs from rw_eq(q, p)");
    if (pq && qr && !pr) fail("transitive", "rw_eq(p, r) false");
    for (auto [a, b, eq] : {std::tuple{&p, &q, pq}, std::tuple{&q, &r, qr}, std::tuple{&p, &r, pr}}) {
      if (eq && !(endpoints(*a) == endpoints(*b))) fail("equal endpoints", "endpoints differ");
      // Members of one family are rw-connected by construction.
      if (!eq) out.metrics["connected_not_rw_eq"] += 1;
    }
    return out;
  });
}

CheckReport run_campaign(std::string_view law, const CampaignOptions& opts) {
  if (law == "groupoid") return check_groupoid_laws(opts);
  if (law == "interchange") return run_interchange(opts);
  if (law == "pentagon") return run_pentagon(opts);
  if (law == "triangle") return run_triangle(opts);
  if (law == "confluence") return run_confluence(opts);
  if (law == "termination") return run_termination(opts);
  if (law == "equivalence") return run_equivalence(opts);
  throw Error("unknown law " + std::string(law));
}

}  // namespace pathkit
