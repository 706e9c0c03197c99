#include "pathkit/generate.hpp"

#include <array>

namespace pathkit {

namespace {

constexpr std::array<const char*, 3> kFreeNames{"x", "y", "z"};
constexpr std::array<const char*, 4> kBinderHints{"x", "y", "w", "u"};
// Terms above this size only get reflexivity; keeps campaigns desk-sized.
constexpr std::size_t kMaxTermSize = 200;
constexpr std::size_t kMaxWalkSize = 400;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void subpath_positions(const Path& p, PathPosition& here, std::vector<PathPosition>& out) {
  out.push_back(here);
  switch (p.kind()) {
    case PathKind::Tau:
      here.steps.push_back(PathStep::First);
      subpath_positions(p.first(), here, out);
      here.steps.back() = PathStep::Second;
      subpath_positions(p.second(), here, out);
      here.steps.pop_back();
      break;
    case PathKind::Sigma:
    case PathKind::Xi:
    case PathKind::Mu:
    case PathKind::Nu:
      here.steps.push_back(PathStep::Inner);
      subpath_positions(p.inner(), here, out);
      here.steps.pop_back();
      break;
    default:
      break;
  }
}

}  // namespace

std::map<PathKind, double> GeneratorConfig::default_weights() {
  return {{PathKind::Rho, 1},   {PathKind::Beta, 1}, {PathKind::Eta, 1}, {PathKind::Sigma, 2},
          {PathKind::Tau, 2},   {PathKind::Xi, 1},   {PathKind::Mu, 1},  {PathKind::Nu, 1}};
}

void GeneratorConfig::validate() const {
  if (max_term_depth == 0 || max_path_depth == 0) throw Error("generator depths must be positive");
  for (PathKind k : {PathKind::Rho, PathKind::Beta, PathKind::Eta, PathKind::Sigma, PathKind::Tau,
                     PathKind::Xi, PathKind::Mu, PathKind::Nu}) {
    auto it = constructor_weights.find(k);
    if (it == constructor_weights.end() || !(it->second > 0))
      throw Error("weight for " + std::string(to_string(k)) + " must be positive");
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

Generator::Generator(GeneratorConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  cfg_.validate();
}

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t Generator::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Term Generator::term(std::size_t depth, std::uint32_t scope) {
  auto variable = [&] {
    if (scope > 0 && coin())
      return Term::bound(static_cast<std::uint32_t>(below(scope)), kBinderHints[0]);
    return Term::free(kFreeNames[below(kFreeNames.size())]);
  };
  auto hint = [&] { return std::string(kBinderHints[below(kBinderHints.size())]); };

  if (depth <= 1) {
    if (below(4) == 0) {
      std::string h = hint();
      return Term::lam(h, Term::bound(0, h));
    }
    return variable();
  }
  // variable, abstraction, application, beta-redex, eta-shaped abstraction
  std::discrete_distribution<int> shape({1, 2, 2, depth >= 3 ? 2.0 : 0.0, depth >= 3 ? 1.0 : 0.0});
  switch (shape(rng_)) {
    case 0:
      return variable();
    case 1: {
      std::string h = hint();
      return Term::lam(h, term(depth - 1, scope + 1));
    }
    case 2: {
      Term f = term(depth - 1, scope);
      return Term::app(std::move(f), term(depth - 1, scope));
    }
    case 3: {
      std::string h = hint();
      Term body = term(depth - 2, scope + 1);
      return Term::app(Term::lam(h, std::move(body)), term(depth - 1, scope));
    }
    default: {
      std::string h = hint();
      Term m = shift(term(depth - 2, scope), 1);
      return Term::lam(h, Term::app(std::move(m), Term::bound(0, h)));
    }
  }
}

PathKind Generator::pick(const std::vector<PathKind>& allowed) {
  std::vector<double> w;
  for (PathKind k : allowed) w.push_back(cfg_.constructor_weights.at(k));
  std::discrete_distribution<std::size_t> d(w.begin(), w.end());
  return allowed[d(rng_)];
}

std::optional<Path> Generator::atomic_from(const Term& t, std::size_t depth) {
  std::vector<Redex> fits;
  for (Redex& r : contractions(t))
    if (r.position.steps.size() < depth) fits.push_back(std::move(r));
  if (fits.empty()) return std::nullopt;
  const Redex& r = fits[below(fits.size())];
  return wrap_step(t, r.position, r.kind);
}

Path Generator::expansion_to(const Term& t) {
  if (coin()) {
    // eta: lam h. t h
    Term redex = Term::lam("w", Term::app(shift(t, 1), Term::bound(0, "w")));
    return Path::eta(std::move(redex));
  }
  if (coin()) return Path::beta(Term::app(Term::lam("x", Term::bound(0, "x")), t));
  // A vacuous binder applied to a small argument.
  return Path::beta(Term::app(Term::lam("u", shift(t, 1)), term(1)));
}

Path Generator::path_from(const Term& t, std::size_t depth) {
  if (t.size() > kMaxTermSize) return Path::rho(t);
  std::optional<Path> atom = atomic_from(t, depth);
  std::vector<PathKind> allowed{PathKind::Rho};
  if (atom) allowed.push_back(atom->is(PathKind::Eta) ? PathKind::Eta : PathKind::Beta);
  if (depth >= 2) {
    allowed.push_back(PathKind::Sigma);
    allowed.push_back(PathKind::Tau);
    if (t.is_lam()) allowed.push_back(PathKind::Xi);
    if (t.is_app()) {
      allowed.push_back(PathKind::Mu);
      allowed.push_back(PathKind::Nu);
    }
  }
  switch (pick(allowed)) {
    case PathKind::Rho:
      return Path::rho(t);
    case PathKind::Beta:
    case PathKind::Eta:
      return *atom;
    case PathKind::Sigma:
      return Path::sigma(path_to(t, depth - 1));
    case PathKind::Tau: {
      Path p = path_from(t, depth - 1);
      Path q = path_from(target(p), depth - 1);
      return Path::tau(std::move(p), std::move(q));
    }
    case PathKind::Xi:
      return Path::xi(t.name(), path_from(t.body(), depth - 1));
    case PathKind::Mu:
      return Path::mu(t.fun(), path_from(t.arg(), depth - 1));
    case PathKind::Nu:
      return Path::nu(path_from(t.fun(), depth - 1), t.arg());
  }
  return Path::rho(t);
}

Path Generator::path_to(const Term& t, std::size_t depth) {
  if (t.size() > kMaxTermSize) return Path::rho(t);
  std::vector<PathKind> allowed{PathKind::Rho, PathKind::Beta};
  if (depth >= 2) {
    allowed.push_back(PathKind::Sigma);
    allowed.push_back(PathKind::Tau);
    if (t.is_lam()) allowed.push_back(PathKind::Xi);
    if (t.is_app()) {
      allowed.push_back(PathKind::Mu);
      allowed.push_back(PathKind::Nu);
    }
  }
  switch (pick(allowed)) {
    case PathKind::Rho:
      return Path::rho(t);
    case PathKind::Beta:
    case PathKind::Eta:
      return expansion_to(t);
    case PathKind::Sigma:
      return Path::sigma(path_from(t, depth - 1));
    case PathKind::Tau: {
      Path q = path_to(t, depth - 1);
      Path p = path_to(source(q), depth - 1);
      return Path::tau(std::move(p), std::move(q));
    }
    case PathKind::Xi:
      return Path::xi(t.name(), path_to(t.body(), depth - 1));
    case PathKind::Mu:
      return Path::mu(t.fun(), path_to(t.arg(), depth - 1));
    case PathKind::Nu:
      return Path::nu(path_to(t.fun(), depth - 1), t.arg());
  }
  return Path::rho(t);
}

std::optional<RwStepRecord> Generator::forward_step(const Path& p) {
  std::vector<RwRedex> redexes = rw_redexes(p);
  if (redexes.empty()) return std::nullopt;
  RwRedex& r = redexes[below(redexes.size())];
  Path next = rw_apply(p, r.position, r.rule);
  return RwStepRecord{std::move(r.position), std::move(r.rule), Direction::Forward, p,
                      std::move(next)};
}

std::optional<RwStepRecord> Generator::reverse_step(const Path& p) {
  std::vector<PathPosition> positions;
  PathPosition root;
  subpath_positions(p, root, positions);
  PathPosition at = positions[below(positions.size())];
  Path q = *subpath(p, at);
  Endpoints e = endpoints(q);

  std::vector<std::pair<const char*, Path>> options;
  options.emplace_back("ss", Path::sigma(Path::sigma(q)));
  options.emplace_back("trr", Path::tau(q, Path::rho(e.target)));
  options.emplace_back("tlr", Path::tau(Path::rho(e.source), q));
  if (q.is(PathKind::Rho)) {
    options.emplace_back("sr", Path::sigma(q));
    Path r = path_from(q.term(), 2);
    options.emplace_back("tr", Path::tau(r, Path::sigma(r)));
    Path s = path_to(q.term(), 2);
    options.emplace_back("tsr", Path::tau(Path::sigma(s), s));
  }
  if (q.is(PathKind::Tau) && q.second().is(PathKind::Tau))
    options.emplace_back(
        "tt", Path::tau(Path::tau(q.first(), q.second().first()), q.second().second()));
  auto& [rule, expanded] = options[below(options.size())];
  Path after = replace_subpath(p, at, expanded);
  return RwStepRecord{std::move(at), rule, Direction::Reverse, p, std::move(after)};
}

RwSequence Generator::walk(const Path& start, std::size_t steps, double reverse_prob) {
  std::vector<Path> entries{start};
  std::vector<RwStepRecord> records;
  for (std::size_t i = 0; i < steps; ++i) {
    const Path& cur = entries.back();
    bool reverse = cur.size() <= kMaxWalkSize && coin(reverse_prob);
    std::optional<RwStepRecord> s = reverse ? reverse_step(cur) : forward_step(cur);
    if (!s && !reverse && cur.size() <= kMaxWalkSize) s = reverse_step(cur);
    if (!s) break;
    entries.push_back(s->after);
    records.push_back(std::move(*s));
  }
  return trusted_sequence(std::move(entries), std::move(records), endpoints(start));
}

Term gen_term(const GeneratorConfig& cfg) { return Generator(cfg).term(); }

Path gen_path(const GeneratorConfig& cfg, const std::optional<Term>& from) {
  Generator g(cfg);
  Term t = from ? *from : g.term();
  return g.path_from(t, cfg.max_path_depth);
}

}  // namespace pathkit
