#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "equitynet/common.hpp"
#include "equitynet/equilibrium.hpp"
#include "equitynet/network.hpp"
#include "equitynet/objective.hpp"

namespace equitynet::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Acceptance checks.  Each runs a self-contained randomized or deterministic
// suite and reports the worst observed figure in `detail`.
CheckResult equilibrium_foc_and_nash(std::uint64_t seed);
CheckResult balance_conditions(std::uint64_t seed);
CheckResult oracle_equivalence(std::uint64_t seed);
CheckResult clique_optimality(std::uint64_t seed);
CheckResult three_agent_closed_forms();
CheckResult rp_sweep_nonmonotonic();
CheckResult link_derivatives(std::uint64_t seed);
CheckResult beta_invariance(std::uint64_t seed);
CheckResult spectral_certificates(std::uint64_t seed);

// Supplementary property suites (model regularity, uniqueness, monotone
// comparative statics of the total share, grid optimality of the
// residual-profit share, weak-link response thresholds).
CheckResult model_regularity();
CheckResult uniqueness_and_monotonicity(std::uint64_t seed);
CheckResult rp_grid_optimality(std::uint64_t seed);
CheckResult weak_link_thresholds();

std::vector<CheckResult> run_all(std::uint64_t seed);

// Prints one pass/fail line per check; returns the number of failures.
int run_and_report(std::ostream& out, std::uint64_t seed);

// Implicit-differentiation oracle for d Y* / d G_ij at an arbitrary
// allocation: differentiates the equilibrium fixed point directly, with no
// balance assumption.  Used to certify the closed form.
double d_performance_implicit(const WeightedNetwork& net,
                              const SuccessModel& model,
                              const EquityAllocation& alloc,
                              const EquilibriumResult& result, int i, int j);

// Max relative spread of dY(i, j) / (sigma_i sigma_j) across active pairs,
// where dY is any pairwise derivative routine (injectable for canary tests).
template <class F>
double pairwise_ratio_spread(const Vector& shares, const AgentSet& active,
                             F&& dY) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  const auto& m = active.members();
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = p + 1; q < m.size(); ++q) {
      const int i = m[p], j = m[q];
      const double r = dY(i, j) / (shares(i) * shares(j));
      if (first) {
        lo = hi = r;
        first = false;
      } else {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
    }
  }
  if (first) return 0.0;
  return (hi - lo) / std::max(1e-300, std::abs(hi));
}

}  // namespace equitynet::verify
