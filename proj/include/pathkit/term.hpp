#pragma once

// Untyped lambda terms in locally nameless form: bound variables are de Bruijn
// indices carrying a surface-name hint, free variables are names. Structural
// equality (ignoring hints) is alpha-equivalence.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathkit/error.hpp"

namespace pathkit {

enum class TermKind : std::uint8_t { Free, Bound, Lam, App };

class Term {
 public:
  static Term free(std::string name);
  static Term bound(std::uint32_t index, std::string hint);
  static Term lam(std::string hint, Term body);
  static Term app(Term fun, Term arg);

  TermKind kind() const;
  bool is_free() const { return kind() == TermKind::Free; }
  bool is_bound() const { return kind() == TermKind::Bound; }
  bool is_lam() const { return kind() == TermKind::Lam; }
  bool is_app() const { return kind() == TermKind::App; }

  /// Free variable name, or the surface hint of a binder / bound variable.
  const std::string& name() const;
  std::uint32_t index() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  /// Alpha-invariant structural hash.
  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;

  /// Alpha-equivalence.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

bool alpha_eq(const Term& a, const Term& b);

enum class TermStep : std::uint8_t { Body, Fun, Arg };

struct TermPosition {
  std::vector<TermStep> steps;

  bool is_root() const { return steps.empty(); }
  TermPosition then(TermStep s) const;
  std::string to_string() const;
  friend bool operator==(const TermPosition&, const TermPosition&) = default;
};

std::optional<Term> subterm(const Term& t, const TermPosition& pos);
/// Replaces the subterm at `pos`; throws Error on an invalid position.
Term replace_subterm(const Term& t, const TermPosition& pos, const Term& replacement);

std::set<std::string> free_vars(const Term& t);
/// True when de Bruijn index `index` (relative to the root of `t`) occurs in t.
bool has_loose(const Term& t, std::uint32_t index);
/// Adds `delta` to every index >= cutoff.
Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff = 0);
/// Replaces loose index `index` by `value` (shifted under binders) and lowers
/// the indices above it: the core of beta-contraction.
Term open_with(const Term& body, const Term& value, std::uint32_t index = 0);

/// Capture-avoiding substitution of the free variable `var` by `value`.
Term substitute(const Term& body, std::string_view var, const Term& value);

enum class Contraction : std::uint8_t { Beta, Eta };
std::string_view to_string(Contraction c);

bool is_beta_redex(const Term& t);
/// lam x. M x with x not free in M.
bool is_eta_redex(const Term& t);
/// Contracts `t` at its root; nullopt when `t` is not a redex of that kind.
std::optional<Term> contract_root(const Term& t, Contraction kind);
/// Contracts at `pos`; throws Error when there is no such redex.
Term contract(const Term& t, const TermPosition& pos, Contraction kind);

struct Redex {
  TermPosition position;
  Contraction kind;
  Term result;
};

/// Every one-step contraction of `t`. Eta-redexes come first, then
/// beta-redexes; each group is listed leftmost-outermost (pre-order).
std::vector<Redex> contractions(const Term& t);
std::optional<Redex> first_contraction(const Term& t);

struct ReductionTrace {
  Term start;
  std::vector<Redex> steps;

  const Term& final_term() const { return steps.empty() ? start : steps.back().result; }
};

class TermFuelExhausted : public FuelExhausted {
 public:
  explicit TermFuelExhausted(ReductionTrace partial)
      : FuelExhausted("term normalization ran out of fuel after " +
                      std::to_string(partial.steps.size()) + " steps"),
        partial_(std::move(partial)) {}
  const ReductionTrace& partial() const { return partial_; }

 private:
  ReductionTrace partial_;
};

inline constexpr std::size_t kDefaultTermFuel = 10'000;

/// Applies first_contraction until the term is normal. Throws
/// TermFuelExhausted (with the partial trace) after `fuel` steps.
ReductionTrace normalize_term(const Term& t, std::size_t fuel = kDefaultTermFuel);

// ---------------------------------------------------------------------------
// Surface syntax.

enum class Notation : std::uint8_t { Ascii, Paper };

Term parse_term(std::string_view text);

/// Prints with binder names chosen so that the output re-parses to an
/// alpha-equivalent term.
std::string print_term(const Term& t, Notation notation = Notation::Ascii);

/// Name bookkeeping shared by the term and path printers. `taken` holds the
/// free names of the whole object being printed; `scope` the enclosing binder
/// names, innermost last.
class NameContext {
 public:
  explicit NameContext(std::set<std::string> taken) : taken_(std::move(taken)) {}

  /// Picks a printable name for a binder with the given hint and pushes it.
  const std::string& bind(const std::string& hint);
  void unbind() { scope_.pop_back(); }
  std::string lookup(std::uint32_t index) const;
  std::size_t depth() const { return scope_.size(); }

 private:
  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

void print_term_to(std::string& out, const Term& t, NameContext& names, Notation notation);

/// Fresh-name scheme: `base` stripped of trailing digits, then the smallest
/// numeric suffix not rejected by `used` (the bare base is tried first).
template <class Used>
std::string fresh_name(std::string base, Used&& used) {
  while (base.size() > 1 && base.back() >= '0' && base.back() <= '9') base.pop_back();
  if (!used(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------

struct Term::Node {
  TermKind kind;
  std::uint32_t index = 0;
  std::string name;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t hash = 0;
  std::size_t size = 1;
};

inline TermKind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline std::uint32_t Term::index() const { return node_->index; }
inline const Term& Term::body() const { return *node_->left; }
inline const Term& Term::fun() const { return *node_->left; }
inline const Term& Term::arg() const { return *node_->right; }
inline std::size_t Term::hash() const { return node_->hash; }
inline std::size_t Term::size() const { return node_->size; }

}  // namespace pathkit
