#pragma once

// Law-checking campaigns over generated instances. Sample i draws from its
// own generator seeded by sample_seed(seed, i), so results do not depend on
// the execution mode.

#include <cstdint>
#include <string_view>

#include "pathkit/generate.hpp"
#include "pathkit/parallel.hpp"
#include "pathkit/report.hpp"
#include "pathkit/rw2.hpp"

namespace pathkit {

struct CampaignOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Maximum path depth of generated 1-cells.
  std::size_t depth = 4;
  std::size_t term_depth = 4;
  /// Oracle-check the first `oracle_subsample` samples (all of them when
  /// `oracle_all`).
  std::size_t oracle_subsample = 0;
  bool oracle_all = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t fuel = kDefaultPathFuel;
  /// Randomized strategies per path in the confluence campaign.
  std::size_t strategies = 20;
  Execution execution = Execution::Parallel;

  GeneratorConfig generator(std::size_t index) const;
  bool oracle_on(std::size_t index) const { return oracle_all || index < oracle_subsample; }
};

/// The six weak-groupoid equations on random composable triples
/// s: a -> b, r: b -> c, t: c -> d.
CheckReport check_groupoid_laws(std::size_t samples, std::uint64_t seed, std::size_t depth);
CheckReport check_groupoid_laws(const CampaignOptions& opts);

/// LHS = hcomp(alpha ; chi, theta ; phi) against RHS = hcomp(alpha, theta) ;
/// hcomp(chi, phi). Throws SequenceError when the cells do not compose.
CheckReport check_interchange(const RwSequence& alpha, const RwSequence& theta,
                              const RwSequence& chi, const RwSequence& phi, Rw2Mode mode,
                              const OracleOptions& oracle = {});

/// Pentagon on tau(s, tau(r, tau(p, u))): both routes must end at
/// tau(tau(tau(s, r), p), u) and be rw2-equal (canonical mode, then the
/// oracle when `use_oracle`).
CheckReport check_pentagon(const Path& s, const Path& r, const Path& p, const Path& u,
                           bool use_oracle = true, const OracleOptions& oracle = {});
/// Triangle on tau(s, tau(rho_b, r)); both routes must end at tau(s, r).
CheckReport check_triangle(const Path& r, const Path& s, bool use_oracle = true,
                           const OracleOptions& oracle = {});

/// The two composite routes of the pentagon and the triangle.
struct CellRoutes {
  RwSequence left;
  RwSequence right;
  Path expected_end;
};
CellRoutes pentagon_routes(const Path& s, const Path& r, const Path& p, const Path& u);
CellRoutes triangle_routes(const Path& r, const Path& s);

CheckReport run_interchange(const CampaignOptions& opts);
CheckReport run_pentagon(const CampaignOptions& opts);
CheckReport run_triangle(const CampaignOptions& opts);
CheckReport run_confluence(const CampaignOptions& opts);
CheckReport run_termination(const CampaignOptions& opts);
/// Reflexivity, symmetry and transitivity of rw_eq on triples drawn from
/// families connected by random forward and reverse rw-steps.
CheckReport run_equivalence(const CampaignOptions& opts);

/// Dispatch by law name: groupoid, interchange, pentagon, triangle,
/// confluence, termination, equivalence. Throws Error on an unknown name.
CheckReport run_campaign(std::string_view law, const CampaignOptions& opts);

}  // namespace pathkit
