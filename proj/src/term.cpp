#include "pathkit/term.hpp"

#include <algorithm>
#include <functional>

#include "term_parse.hpp"

namespace pathkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::free(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Free;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::bound(std::uint32_t index, std::string hint) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Bound;
  n->index = index;
  n->name = std::move(hint);
  n->hash = mix(2, index);
  return Term(std::move(n));
}

Term Term::lam(std::string hint, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->name = std::move(hint);
  n->hash = mix(3, body.hash());
  n->size = 1 + body.size();
  n->left = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->hash = mix(mix(4, fun.hash()), arg.hash());
  n->size = 1 + fun.size() + arg.size();
  n->left = std::move(fun);
  n->right = std::move(arg);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Free:
      return a.name() == b.name();
    case TermKind::Bound:
      return a.index() == b.index();
    case TermKind::Lam:
      return a.body() == b.body();
    case TermKind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

TermPosition TermPosition::then(TermStep s) const {
  TermPosition p = *this;
  p.steps.push_back(s);
  return p;
}

std::string TermPosition::to_string() const {
  if (steps.empty()) return "root";
  std::string out;
  for (TermStep s : steps) {
    if (!out.empty()) out += '.';
    out += s == TermStep::Body ? "body" : s == TermStep::Fun ? "fun" : "arg";
  }
  return out;
}

std::optional<Term> subterm(const Term& t, const TermPosition& pos) {
  const Term* cur = &t;
  for (TermStep s : pos.steps) {
    if (s == TermStep::Body && cur->is_lam()) {
      cur = &cur->body();
    } else if (s == TermStep::Fun && cur->is_app()) {
      cur = &cur->fun();
    } else if (s == TermStep::Arg && cur->is_app()) {
      cur = &cur->arg();
    } else {
      return std::nullopt;
    }
  }
  return *cur;
}

namespace {

Term replace_from(const Term& t, const std::vector<TermStep>& steps, std::size_t i,
                  const Term& replacement) {
  if (i == steps.size()) return replacement;
  TermStep s = steps[i];
  if (s == TermStep::Body && t.is_lam())
    return Term::lam(t.name(), replace_from(t.body(), steps, i + 1, replacement));
  if (s == TermStep::Fun && t.is_app())
    return Term::app(replace_from(t.fun(), steps, i + 1, replacement), t.arg());
  if (s == TermStep::Arg && t.is_app())
    return Term::app(t.fun(), replace_from(t.arg(), steps, i + 1, replacement));
  throw Error("invalid term position");
}

void collect_free(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Free:
      out.insert(t.name());
      break;
    case TermKind::Bound:
      break;
    case TermKind::Lam:
      collect_free(t.body(), out);
      break;
    case TermKind::App:
      collect_free(t.fun(), out);
      collect_free(t.arg(), out);
      break;
  }
}

}  // namespace

Term replace_subterm(const Term& t, const TermPosition& pos, const Term& replacement) {
  return replace_from(t, pos.steps, 0, replacement);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool has_loose(const Term& t, std::uint32_t index) {
  switch (t.kind()) {
    case TermKind::Free:
      return false;
    case TermKind::Bound:
      return t.index() == index;
    case TermKind::Lam:
      return has_loose(t.body(), index + 1);
    case TermKind::App:
      return has_loose(t.fun(), index) || has_loose(t.arg(), index);
  }
  return false;
}

Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff) {
  if (delta == 0) return t;
  switch (t.kind()) {
    case TermKind::Free:
      return t;
    case TermKind::Bound:
      if (t.index() < cutoff) return t;
      return Term::bound(static_cast<std::uint32_t>(t.index() + delta), t.name());
    case TermKind::Lam:
      return Term::lam(t.name(), shift(t.body(), delta, cutoff + 1));
    case TermKind::App:
      return Term::app(shift(t.fun(), delta, cutoff), shift(t.arg(), delta, cutoff));
  }
  return t;
}

Term open_with(const Term& body, const Term& value, std::uint32_t index) {
  switch (body.kind()) {
    case TermKind::Free:
      return body;
    case TermKind::Bound:
      if (body.index() == index) return shift(value, index);
      if (body.index() > index) return Term::bound(body.index() - 1, body.name());
      return body;
    case TermKind::Lam:
      return Term::lam(body.name(), open_with(body.body(), value, index + 1));
    case TermKind::App:
      return Term::app(open_with(body.fun(), value, index), open_with(body.arg(), value, index));
  }
  return body;
}

namespace {

Term substitute_at(const Term& t, std::string_view var, const Term& value, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::Free:
      return t.name() == var ? shift(value, depth) : t;
    case TermKind::Bound:
      return t;
    case TermKind::Lam:
      return Term::lam(t.name(), substitute_at(t.body(), var, value, depth + 1));
    case TermKind::App:
      return Term::app(substitute_at(t.fun(), var, value, depth),
                       substitute_at(t.arg(), var, value, depth));
  }
  return t;
}

}  // namespace

Term substitute(const Term& body, std::string_view var, const Term& value) {
  return substitute_at(body, var, value, 0);
}

std::string_view to_string(Contraction c) { return c == Contraction::Beta ? "beta" : "eta"; }

bool is_beta_redex(const Term& t) { return t.is_app() && t.fun().is_lam(); }

bool is_eta_redex(const Term& t) {
  if (!t.is_lam()) return false;
  const Term& b = t.body();
  return b.is_app() && b.arg().is_bound() && b.arg().index() == 0 && !has_loose(b.fun(), 0);
}

std::optional<Term> contract_root(const Term& t, Contraction kind) {
  if (kind == Contraction::Beta) {
    if (!is_beta_redex(t)) return std::nullopt;
    return open_with(t.fun().body(), t.arg());
  }
  if (!is_eta_redex(t)) return std::nullopt;
  return shift(t.body().fun(), -1);
}

Term contract(const Term& t, const TermPosition& pos, Contraction kind) {
  auto sub = subterm(t, pos);
  if (!sub) throw Error("invalid term position " + pos.to_string());
  auto reduced = contract_root(*sub, kind);
  if (!reduced)
    throw Error("no " + std::string(to_string(kind)) + "-redex at " + pos.to_string());
  return replace_subterm(t, pos, *reduced);
}

namespace {

void preorder(const Term& t, TermPosition& here,
              const std::function<bool(const Term&, const TermPosition&)>& visit) {
  if (!visit(t, here)) return;
  if (t.is_lam()) {
    here.steps.push_back(TermStep::Body);
    preorder(t.body(), here, visit);
    here.steps.pop_back();
  } else if (t.is_app()) {
    here.steps.push_back(TermStep::Fun);
    preorder(t.fun(), here, visit);
    here.steps.back() = TermStep::Arg;
    preorder(t.arg(), here, visit);
    here.steps.pop_back();
  }
}

std::optional<TermPosition> first_of(const Term& t, Contraction kind) {
  std::optional<TermPosition> found;
  TermPosition here;
  preorder(t, here, [&](const Term& sub, const TermPosition& pos) {
    if (found) return false;
    if (kind == Contraction::Eta ? is_eta_redex(sub) : is_beta_redex(sub)) {
      found = pos;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::vector<Redex> contractions(const Term& t) {
  std::vector<Redex> out;
  for (Contraction kind : {Contraction::Eta, Contraction::Beta}) {
    TermPosition here;
    preorder(t, here, [&](const Term& sub, const TermPosition& pos) {
      if (auto r = contract_root(sub, kind)) out.push_back({pos, kind, replace_subterm(t, pos, *r)});
      return true;
    });
  }
  return out;
}

std::optional<Redex> first_contraction(const Term& t) {
  for (Contraction kind : {Contraction::Eta, Contraction::Beta}) {
    if (auto pos = first_of(t, kind)) return Redex{*pos, kind, contract(t, *pos, kind)};
  }
  return std::nullopt;
}

ReductionTrace normalize_term(const Term& t, std::size_t fuel) {
  if (fuel == 0) throw Error("fuel must be positive");
  ReductionTrace trace{t, {}};
  while (auto r = first_contraction(trace.final_term())) {
    if (trace.steps.size() == fuel) throw TermFuelExhausted(std::move(trace));
    trace.steps.push_back(std::move(*r));
  }
  return trace;
}

// ---------------------------------------------------------------------------

const std::string& NameContext::bind(const std::string& hint) {
  std::string name = fresh_name(hint.empty() ? std::string("x") : hint, [&](const std::string& c) {
    return c == "lam" || taken_.count(c) > 0 ||
           std::find(scope_.begin(), scope_.end(), c) != scope_.end();
  });
  scope_.push_back(std::move(name));
  return scope_.back();
}

std::string NameContext::lookup(std::uint32_t index) const {
  if (index >= scope_.size()) return "_" + std::to_string(index - scope_.size());
  return scope_[scope_.size() - 1 - index];
}

void print_term_to(std::string& out, const Term& t, NameContext& names, Notation notation) {
  switch (t.kind()) {
    case TermKind::Free:
      out += t.name();
      return;
    case TermKind::Bound:
      out += names.lookup(t.index());
      return;
    case TermKind::Lam:
      out += notation == Notation::Paper ? "\xCE\xBB" : "\\";
      out += names.bind(t.name());
      out += '.';
      print_term_to(out, t.body(), names, notation);
      names.unbind();
      return;
    case TermKind::App: {
      bool paren_fun = t.fun().is_lam();
      if (paren_fun) out += '(';
      print_term_to(out, t.fun(), names, notation);
      if (paren_fun) out += ')';
      out += ' ';
      bool paren_arg = !t.arg().is_free() && !t.arg().is_bound();
      if (paren_arg) out += '(';
      print_term_to(out, t.arg(), names, notation);
      if (paren_arg) out += ')';
      return;
    }
  }
}

std::string print_term(const Term& t, Notation notation) {
  NameContext names(free_vars(t));
  std::string out;
  print_term_to(out, t, names, notation);
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {

/// True when the cursor sits on a lambda introducer ('\', the lambda sign, or
/// the keyword `lam` followed by whitespace, an identifier and '.').
bool at_lambda(Cursor& cur) {
  char c = cur.peek();
  if (c == '\\') return true;
  std::size_t save = cur.offset();
  if (cur.eat("\xCE\xBB")) {
    cur.reset(save);
    return true;
  }
  bool keyword = false;
  if (cur.at_ident() && cur.ident() == "lam" && cur.at_ws() && cur.at_ident()) {
    cur.ident();
    keyword = cur.peek() == '.';
  }
  cur.reset(save);
  return keyword;
}

Term parse_lam(Cursor& cur, std::vector<std::string>& scope) {
  if (!cur.eat_lambda_sign()) cur.ident();  // the `lam` keyword
  std::string name = cur.ident();
  cur.expect('.');
  scope.push_back(name);
  Term body = parse_term_at(cur, scope);
  scope.pop_back();
  return Term::lam(std::move(name), std::move(body));
}

Term resolve(const std::string& name, const std::vector<std::string>& scope) {
  for (std::size_t i = scope.size(); i-- > 0;) {
    if (scope[i] == name) return Term::bound(static_cast<std::uint32_t>(scope.size() - 1 - i), name);
  }
  return Term::free(name);
}

Term parse_atom(Cursor& cur, std::vector<std::string>& scope) {
  if (cur.eat('(')) {
    Term t = parse_term_at(cur, scope);
    cur.expect(')');
    return t;
  }
  if (cur.at_ident()) return resolve(cur.ident(), scope);
  cur.fail("term");
}

}  // namespace

Term parse_term_at(Cursor& cur, std::vector<std::string>& scope) {
  if (at_lambda(cur)) return parse_lam(cur, scope);
  Term acc = parse_atom(cur, scope);
  while (true) {
    if (at_lambda(cur)) {
      // A trailing abstraction extends to the end, so it closes the spine.
      return Term::app(std::move(acc), parse_lam(cur, scope));
    }
    if (cur.peek() != '(' && !cur.at_ident()) return acc;
    acc = Term::app(std::move(acc), parse_atom(cur, scope));
  }
}

}  // namespace detail

Term parse_term(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<std::string> scope;
  Term t = detail::parse_term_at(cur, scope);
  if (!cur.at_end()) cur.fail("end of input");
  return t;
}

}  // namespace pathkit
