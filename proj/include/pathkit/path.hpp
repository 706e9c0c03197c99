#pragma once

// Computational paths: proof terms for beta-eta equality built from the
// equality axioms rho, beta, eta, sigma, tau, xi, mu and nu.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathkit/term.hpp"

namespace pathkit {

enum class PathKind : std::uint8_t { Rho, Beta, Eta, Sigma, Tau, Xi, Mu, Nu };

std::string_view to_string(PathKind k);

class Path {
 public:
  static Path rho(Term at);
  /// Atomic beta step; the redex must be (lam x.M) N. The contractum is derived.
  static Path beta(Term redex);
  /// Atomic eta step; the redex must be lam x.(M x) with x not free in M.
  static Path eta(Term redex);
  static Path sigma(Path inner);
  static Path tau(Path first, Path second);
  /// Congruence under a binder. The inner path lives in the body's scope:
  /// its terms may mention the bound variable as de Bruijn index 0.
  static Path xi(std::string binder, Path inner);
  /// fun . src(inner)  =  fun . tgt(inner)
  static Path mu(Term fun, Path inner);
  /// src(inner) . arg  =  tgt(inner) . arg
  static Path nu(Path inner, Term arg);

  PathKind kind() const;
  bool is(PathKind k) const { return kind() == k; }

  /// rho/beta/eta: the term; mu: the fixed function; nu: the fixed argument.
  const Term& term() const;
  const std::string& binder() const;
  /// sigma, xi, mu, nu.
  const Path& inner() const;
  const Path& first() const;
  const Path& second() const;

  std::size_t hash() const;
  std::size_t size() const;
  std::size_t depth() const;

  /// Structural equality with alpha-equivalent term components.
  friend bool operator==(const Path& a, const Path& b);

  struct Node;

 private:
  explicit Path(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Path leaf(PathKind kind, Term t);
  std::shared_ptr<const Node> node_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const { return p.hash(); }
};

enum class PathStep : std::uint8_t { Inner, First, Second };

struct PathPosition {
  std::vector<PathStep> steps;

  bool is_root() const { return steps.empty(); }
  PathPosition then(PathStep s) const;
  /// Prefix concatenation: `this` followed by `rest`.
  PathPosition join(const PathPosition& rest) const;
  bool is_prefix_of(const PathPosition& other) const;
  /// Neither position lies inside the other.
  bool disjoint(const PathPosition& other) const;
  std::string to_string() const;

  friend bool operator==(const PathPosition&, const PathPosition&) = default;
  friend auto operator<=>(const PathPosition&, const PathPosition&) = default;
};

std::optional<Path> subpath(const Path& p, const PathPosition& pos);
/// Throws Error on an invalid position.
Path replace_subpath(const Path& p, const PathPosition& pos, const Path& replacement);

struct Endpoints {
  Term source;
  Term target;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

class InvalidPath : public Error {
 public:
  InvalidPath(PathPosition at, std::string reason)
      : Error("invalid path at " + at.to_string() + ": " + reason),
        at_(std::move(at)),
        reason_(std::move(reason)) {}
  const PathPosition& position() const { return at_; }
  const std::string& reason() const { return reason_; }

 private:
  PathPosition at_;
  std::string reason_;
};

/// Source and target terms; throws InvalidPath on the first violated
/// constructor constraint (children are checked before their parent).
Endpoints endpoints(const Path& p);
inline Term source(const Path& p) { return endpoints(p).source; }
inline Term target(const Path& p) { return endpoints(p).target; }
void validate_path(const Path& p);
bool is_valid(const Path& p);

std::set<std::string> free_vars(const Path& p);

/// The atomic step contracting `kind` at `pos` inside `whole`, wrapped in the
/// xi/mu/nu congruences that navigate to the position.
Path wrap_step(const Term& whole, const TermPosition& pos, Contraction kind);

/// Right-nested tau chain; requires a non-empty list.
Path chain(const std::vector<Path>& steps);

/// One wrapped atomic step per trace entry; nullopt for an empty trace.
std::optional<Path> path_of_trace(const ReductionTrace& trace);

class NotBetaEtaEqual : public Error {
 public:
  using Error::Error;
};

/// Path from m to n through their common beta-eta normal form:
/// tau(m ~> Z, sigma(n ~> Z)), degenerate pieces dropped, rho when both
/// traces are empty.
Path path_between(const Term& m, const Term& n, std::size_t fuel = kDefaultTermFuel);

enum class PathStyle : std::uint8_t { Structural, Paper };

std::string print_path(const Path& p, PathStyle style = PathStyle::Structural);
Path parse_path(std::string_view text);

// ---------------------------------------------------------------------------

struct Path::Node {
  PathKind kind;
  std::optional<Term> term;
  std::string binder;
  std::optional<Path> left;
  std::optional<Path> right;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
};

inline PathKind Path::kind() const { return node_->kind; }
inline const Term& Path::term() const { return *node_->term; }
inline const std::string& Path::binder() const { return node_->binder; }
inline const Path& Path::inner() const { return *node_->left; }
inline const Path& Path::first() const { return *node_->left; }
inline const Path& Path::second() const { return *node_->right; }
inline std::size_t Path::hash() const { return node_->hash; }
inline std::size_t Path::size() const { return node_->size; }
inline std::size_t Path::depth() const { return node_->depth; }

}  // namespace pathkit
