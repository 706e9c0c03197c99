#include "pathkit/path.hpp"

#include <algorithm>
#include <functional>

#include "cursor.hpp"
#include "term_parse.hpp"

namespace pathkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<Path::Node> make_node(PathKind kind) {
  auto n = std::make_shared<Path::Node>();
  n->kind = kind;
  n->hash = mix(0x51ed, static_cast<std::size_t>(kind));
  return n;
}

}  // namespace

std::string_view to_string(PathKind k) {
  switch (k) {
    case PathKind::Rho: return "rho";
    case PathKind::Beta: return "beta";
    case PathKind::Eta: return "eta";
    case PathKind::Sigma: return "sigma";
    case PathKind::Tau: return "tau";
    case PathKind::Xi: return "xi";
    case PathKind::Mu: return "mu";
    case PathKind::Nu: return "nu";
  }
  return "?";
}

Path Path::rho(Term at) { return leaf(PathKind::Rho, std::move(at)); }
Path Path::beta(Term redex) { return leaf(PathKind::Beta, std::move(redex)); }
Path Path::eta(Term redex) { return leaf(PathKind::Eta, std::move(redex)); }

Path Path::sigma(Path inner) {
  auto n = make_node(PathKind::Sigma);
  n->hash = mix(n->hash, inner.hash());
  n->size = 1 + inner.size();
  n->depth = 1 + inner.depth();
  n->left = std::move(inner);
  return Path(std::move(n));
}

Path Path::tau(Path first, Path second) {
  auto n = make_node(PathKind::Tau);
  n->hash = mix(mix(n->hash, first.hash()), second.hash());
  n->size = 1 + first.size() + second.size();
  n->depth = 1 + std::max(first.depth(), second.depth());
  n->left = std::move(first);
  n->right = std::move(second);
  return Path(std::move(n));
}

Path Path::xi(std::string binder, Path inner) {
  auto n = make_node(PathKind::Xi);
  n->hash = mix(n->hash, inner.hash());
  n->size = 1 + inner.size();
  n->depth = 1 + inner.depth();
  n->binder = std::move(binder);
  n->left = std::move(inner);
  return Path(std::move(n));
}

Path Path::mu(Term fun, Path inner) {
  auto n = make_node(PathKind::Mu);
  n->hash = mix(mix(n->hash, fun.hash()), inner.hash());
  n->size = 1 + inner.size();
  n->depth = 1 + inner.depth();
  n->term = std::move(fun);
  n->left = std::move(inner);
  return Path(std::move(n));
}

Path Path::nu(Path inner, Term arg) {
  auto n = make_node(PathKind::Nu);
  n->hash = mix(mix(n->hash, arg.hash()), inner.hash());
  n->size = 1 + inner.size();
  n->depth = 1 + inner.depth();
  n->term = std::move(arg);
  n->left = std::move(inner);
  return Path(std::move(n));
}

Path Path::leaf(PathKind kind, Term t) {
  auto n = make_node(kind);
  n->hash = mix(n->hash, t.hash());
  n->term = std::move(t);
  return Path(std::move(n));
}

bool operator==(const Path& a, const Path& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PathKind::Rho:
    case PathKind::Beta:
    case PathKind::Eta:
      return a.term() == b.term();
    case PathKind::Sigma:
    case PathKind::Xi:
      return a.inner() == b.inner();
    case PathKind::Mu:
    case PathKind::Nu:
      return a.term() == b.term() && a.inner() == b.inner();
    case PathKind::Tau:
      return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

// ---------------------------------------------------------------------------

PathPosition PathPosition::then(PathStep s) const {
  PathPosition p = *this;
  p.steps.push_back(s);
  return p;
}

PathPosition PathPosition::join(const PathPosition& rest) const {
  PathPosition p = *this;
  p.steps.insert(p.steps.end(), rest.steps.begin(), rest.steps.end());
  return p;
}

bool PathPosition::is_prefix_of(const PathPosition& other) const {
  return steps.size() <= other.steps.size() &&
         std::equal(steps.begin(), steps.end(), other.steps.begin());
}

bool PathPosition::disjoint(const PathPosition& other) const {
  return !is_prefix_of(other) && !other.is_prefix_of(*this);
}

std::string PathPosition::to_string() const {
  if (steps.empty()) return "root";
  std::string out;
  for (PathStep s : steps) {
    if (!out.empty()) out += '.';
    out += s == PathStep::Inner ? "inner" : s == PathStep::First ? "first" : "second";
  }
  return out;
}

namespace {

bool unary(PathKind k) {
  return k == PathKind::Sigma || k == PathKind::Xi || k == PathKind::Mu || k == PathKind::Nu;
}

Path with_inner(const Path& p, Path inner) {
  switch (p.kind()) {
    case PathKind::Sigma: return Path::sigma(std::move(inner));
    case PathKind::Xi: return Path::xi(p.binder(), std::move(inner));
    case PathKind::Mu: return Path::mu(p.term(), std::move(inner));
    case PathKind::Nu: return Path::nu(std::move(inner), p.term());
    default: throw Error("path has no inner component");
  }
}

Path replace_from(const Path& p, const std::vector<PathStep>& steps, std::size_t i,
                  const Path& replacement) {
  if (i == steps.size()) return replacement;
  PathStep s = steps[i];
  if (s == PathStep::Inner && unary(p.kind()))
    return with_inner(p, replace_from(p.inner(), steps, i + 1, replacement));
  if (s == PathStep::First && p.is(PathKind::Tau))
    return Path::tau(replace_from(p.first(), steps, i + 1, replacement), p.second());
  if (s == PathStep::Second && p.is(PathKind::Tau))
    return Path::tau(p.first(), replace_from(p.second(), steps, i + 1, replacement));
  throw Error("invalid path position");
}

}  // namespace

std::optional<Path> subpath(const Path& p, const PathPosition& pos) {
  const Path* cur = &p;
  for (PathStep s : pos.steps) {
    if (s == PathStep::Inner && unary(cur->kind())) {
      cur = &cur->inner();
    } else if (s == PathStep::First && cur->is(PathKind::Tau)) {
      cur = &cur->first();
    } else if (s == PathStep::Second && cur->is(PathKind::Tau)) {
      cur = &cur->second();
    } else {
      return std::nullopt;
    }
  }
  return *cur;
}

Path replace_subpath(const Path& p, const PathPosition& pos, const Path& replacement) {
  return replace_from(p, pos.steps, 0, replacement);
}

// ---------------------------------------------------------------------------

namespace {

Endpoints endpoints_at(const Path& p, PathPosition& here) {
  switch (p.kind()) {
    case PathKind::Rho:
      return {p.term(), p.term()};
    case PathKind::Beta: {
      auto r = contract_root(p.term(), Contraction::Beta);
      if (!r) throw InvalidPath(here, "not a beta-redex: " + print_term(p.term()));
      return {p.term(), *r};
    }
    case PathKind::Eta: {
      auto r = contract_root(p.term(), Contraction::Eta);
      if (!r) {
        const Term& t = p.term();
        if (t.is_lam() && t.body().is_app() && t.body().arg().is_bound() &&
            t.body().arg().index() == 0)
          throw InvalidPath(here, "eta side condition violated: bound variable free in " +
                                      print_term(t));
        throw InvalidPath(here, "not an eta-redex: " + print_term(t));
      }
      return {p.term(), *r};
    }
    case PathKind::Sigma: {
      here.steps.push_back(PathStep::Inner);
      Endpoints e = endpoints_at(p.inner(), here);
      here.steps.pop_back();
      return {e.target, e.source};
    }
    case PathKind::Tau: {
      here.steps.push_back(PathStep::First);
      Endpoints a = endpoints_at(p.first(), here);
      here.steps.back() = PathStep::Second;
      Endpoints b = endpoints_at(p.second(), here);
      here.steps.pop_back();
      if (!(a.target == b.source))
        throw InvalidPath(here, "tau endpoint mismatch: " + print_term(a.target) + " vs " +
                                    print_term(b.source));
      return {a.source, b.target};
    }
    case PathKind::Xi: {
      here.steps.push_back(PathStep::Inner);
      Endpoints e = endpoints_at(p.inner(), here);
      here.steps.pop_back();
      return {Term::lam(p.binder(), e.source), Term::lam(p.binder(), e.target)};
    }
    case PathKind::Mu: {
      here.steps.push_back(PathStep::Inner);
      Endpoints e = endpoints_at(p.inner(), here);
      here.steps.pop_back();
      return {Term::app(p.term(), e.source), Term::app(p.term(), e.target)};
    }
    case PathKind::Nu: {
      here.steps.push_back(PathStep::Inner);
      Endpoints e = endpoints_at(p.inner(), here);
      here.steps.pop_back();
      return {Term::app(e.source, p.term()), Term::app(e.target, p.term())};
    }
  }
  throw InvalidPath(here, "unknown constructor");
}

void collect_free(const Path& p, std::set<std::string>& out) {
  if (p.is(PathKind::Rho) || p.is(PathKind::Beta) || p.is(PathKind::Eta) ||
      p.is(PathKind::Mu) || p.is(PathKind::Nu)) {
    auto fv = free_vars(p.term());
    out.insert(fv.begin(), fv.end());
  }
  if (p.is(PathKind::Tau)) {
    collect_free(p.first(), out);
    collect_free(p.second(), out);
  } else if (unary(p.kind())) {
    collect_free(p.inner(), out);
  }
}

}  // namespace

Endpoints endpoints(const Path& p) {
  PathPosition here;
  return endpoints_at(p, here);
}

void validate_path(const Path& p) { endpoints(p); }

bool is_valid(const Path& p) {
  try {
    endpoints(p);
    return true;
  } catch (const InvalidPath&) {
    return false;
  }
}

std::set<std::string> free_vars(const Path& p) {
  std::set<std::string> out;
  collect_free(p, out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Path wrap_from(const Term& t, const std::vector<TermStep>& steps, std::size_t i,
               Contraction kind) {
  if (i == steps.size()) {
    Path step = kind == Contraction::Beta ? Path::beta(t) : Path::eta(t);
    validate_path(step);
    return step;
  }
  switch (steps[i]) {
    case TermStep::Body:
      if (!t.is_lam()) break;
      return Path::xi(t.name(), wrap_from(t.body(), steps, i + 1, kind));
    case TermStep::Fun:
      if (!t.is_app()) break;
      return Path::nu(wrap_from(t.fun(), steps, i + 1, kind), t.arg());
    case TermStep::Arg:
      if (!t.is_app()) break;
      return Path::mu(t.fun(), wrap_from(t.arg(), steps, i + 1, kind));
  }
  throw Error("invalid term position");
}

}  // namespace

Path wrap_step(const Term& whole, const TermPosition& pos, Contraction kind) {
  return wrap_from(whole, pos.steps, 0, kind);
}

Path chain(const std::vector<Path>& steps) {
  if (steps.empty()) throw Error("cannot chain an empty list of paths");
  Path acc = steps.back();
  for (std::size_t i = steps.size() - 1; i-- > 0;) acc = Path::tau(steps[i], std::move(acc));
  return acc;
}

std::optional<Path> path_of_trace(const ReductionTrace& trace) {
  if (trace.steps.empty()) return std::nullopt;
  std::vector<Path> steps;
  const Term* cur = &trace.start;
  for (const Redex& r : trace.steps) {
    steps.push_back(wrap_step(*cur, r.position, r.kind));
    cur = &r.result;
  }
  return chain(steps);
}

Path path_between(const Term& m, const Term& n, std::size_t fuel) {
  ReductionTrace left = normalize_term(m, fuel);
  ReductionTrace right = normalize_term(n, fuel);
  if (!(left.final_term() == right.final_term()))
    throw NotBetaEtaEqual("terms are not beta-eta equal: normal forms " +
                          print_term(left.final_term()) + " and " +
                          print_term(right.final_term()) + " differ");
  auto to_normal = path_of_trace(left);
  auto from_normal = path_of_trace(right);
  if (!to_normal && !from_normal) return Path::rho(m);
  if (!from_normal) return *to_normal;
  Path back = Path::sigma(*from_normal);
  if (!to_normal) return back;
  // Right-nest: tau(s1, tau(s2, ... tau(sk, sigma(...)))).
  std::vector<Path> parts;
  Path cur = *to_normal;
  while (cur.is(PathKind::Tau)) {
    parts.push_back(cur.first());
    cur = cur.second();
  }
  parts.push_back(cur);
  parts.push_back(back);
  return chain(parts);
}

// ---------------------------------------------------------------------------

namespace {

void print_structural(std::string& out, const Path& p, NameContext& names) {
  out += to_string(p.kind());
  out += '(';
  switch (p.kind()) {
    case PathKind::Rho:
    case PathKind::Beta:
    case PathKind::Eta:
      print_term_to(out, p.term(), names, Notation::Ascii);
      break;
    case PathKind::Sigma:
      print_structural(out, p.inner(), names);
      break;
    case PathKind::Tau:
      print_structural(out, p.first(), names);
      out += ", ";
      print_structural(out, p.second(), names);
      break;
    case PathKind::Xi:
      out += names.bind(p.binder());
      out += ". ";
      print_structural(out, p.inner(), names);
      names.unbind();
      break;
    case PathKind::Mu:
      print_term_to(out, p.term(), names, Notation::Ascii);
      out += ", ";
      print_structural(out, p.inner(), names);
      break;
    case PathKind::Nu:
      print_structural(out, p.inner(), names);
      out += ", ";
      print_term_to(out, p.term(), names, Notation::Ascii);
      break;
  }
  out += ')';
}

/// One congruence frame between the root and the current sub-path.
struct Frame {
  PathKind kind;
  const Path* node;
};

Term plug(const std::vector<Frame>& frames, Term hole) {
  for (std::size_t i = frames.size(); i-- > 0;) {
    const Path& f = *frames[i].node;
    switch (frames[i].kind) {
      case PathKind::Xi: hole = Term::lam(f.binder(), std::move(hole)); break;
      case PathKind::Mu: hole = Term::app(f.term(), std::move(hole)); break;
      case PathKind::Nu: hole = Term::app(std::move(hole), f.term()); break;
      default: break;
    }
  }
  return hole;
}

void print_paper(std::string& out, const Path& p, std::vector<Frame>& frames) {
  switch (p.kind()) {
    case PathKind::Rho:
      out += "\xCF\x81";
      return;
    case PathKind::Beta:
    case PathKind::Eta: {
      Endpoints e = endpoints(p);
      out += p.is(PathKind::Beta) ? "\xCE\xB2(" : "\xCE\xB7(";
      out += print_term(plug(frames, e.source), Notation::Paper);
      out += ", ";
      out += print_term(plug(frames, e.target), Notation::Paper);
      out += ')';
      return;
    }
    case PathKind::Sigma:
      out += "\xCF\x83(";
      print_paper(out, p.inner(), frames);
      out += ')';
      return;
    case PathKind::Tau:
      out += "\xCF\x84(";
      print_paper(out, p.first(), frames);
      out += ", ";
      print_paper(out, p.second(), frames);
      out += ')';
      return;
    case PathKind::Xi:
    case PathKind::Mu:
    case PathKind::Nu:
      frames.push_back({p.kind(), &p});
      print_paper(out, p.inner(), frames);
      frames.pop_back();
      return;
  }
}

}  // namespace

std::string print_path(const Path& p, PathStyle style) {
  std::string out;
  if (style == PathStyle::Paper) {
    std::vector<Frame> frames;
    print_paper(out, p, frames);
  } else {
    NameContext names(free_vars(p));
    print_structural(out, p, names);
  }
  return out;
}

namespace {

Path parse_path_at(detail::Cursor& cur, std::vector<std::string>& scope) {
  std::size_t start = cur.offset();
  if (!cur.at_ident()) cur.fail("path");
  std::string head = cur.ident();
  if (!cur.eat('(')) {
    cur.reset(start);
    cur.fail("path");
  }
  auto term = [&] { return detail::parse_term_at(cur, scope); };
  auto path = [&] { return parse_path_at(cur, scope); };
  std::optional<Path> result;
  if (head == "rho") {
    result = Path::rho(term());
  } else if (head == "beta") {
    result = Path::beta(term());
  } else if (head == "eta") {
    result = Path::eta(term());
  } else if (head == "sigma") {
    result = Path::sigma(path());
  } else if (head == "tau") {
    Path a = path();
    cur.expect(',');
    result = Path::tau(std::move(a), path());
  } else if (head == "xi") {
    std::string binder = cur.ident();
    cur.expect('.');
    scope.push_back(binder);
    result = Path::xi(binder, path());
    scope.pop_back();
  } else if (head == "mu") {
    Term f = term();
    cur.expect(',');
    result = Path::mu(std::move(f), path());
  } else if (head == "nu") {
    Path inner = path();
    cur.expect(',');
    result = Path::nu(std::move(inner), term());
  } else {
    cur.reset(start);
    cur.fail("path constructor (rho, beta, eta, sigma, tau, xi, mu, nu)");
  }
  cur.expect(')');
  return *result;
}

}  // namespace

Path parse_path(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<std::string> scope;
  Path p = parse_path_at(cur, scope);
  if (!cur.at_end()) cur.fail("end of input");
  return p;
}

}  // namespace pathkit
