#include "equitynet/objective.hpp"

#include <algorithm>
#include <cmath>

#include "equitynet/numeric.hpp"

namespace equitynet {

double rp_linear_closed_form(double k_star, double alpha, double beta) {
  if (!(k_star > 0.0) || !(alpha > 0.0) || !(beta >= 0.0))
    throw InputError("rp_linear_closed_form: bad parameters");
  const double ba = beta * alpha;
  if (ba >= k_star)
    throw InfeasibleComplementarityError(
        "beta * alpha >= k_star: residual-profit problem is infeasible");
  auto p = [&](double s) {
    return -ba * ba * s * s * s + 3.0 * ba * k_star * s * s -
           4.0 * k_star * k_star * s + 2.0 * k_star * k_star;
  };
  double lo = 0.5, hi = 1.0;
  if (p(lo) <= 0.0) return lo;  // beta -> 0 limit collapses the root to 1/2
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (p(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

OptimalContract optimize(const WeightedNetwork& net, const SuccessModel& model,
                         Objective objective, const SearchOptions& opts) {
  SearchReport report;
  if (net.size() <= opts.max_n_enum)
    report = search_active_set(net, opts);
  else if (is_unweighted(net))
    report = search_active_set_unweighted(net);
  else
    throw TooLargeForEnumerationError(
        "weighted network too large for subset enumeration");

  const IntensiveSolution& unit = report.best.solution;  // total share 1

  OptimalContract contract;
  contract.objective = objective;
  contract.active_set = unit.active;
  contract.centrality = unit.centrality;
  contract.k_star = unit.k_star;

  if (objective == Objective::SuccessProbability) {
    contract.s_star = 1.0;
  } else {
    auto value_at = [&](double s) {
      if (s <= 0.0 || s >= 1.0) return 0.0;
      const double y = predicted_performance(model, s, s / unit.k_star);
      return (1.0 - s) * model.eval(y);
    };
    contract.s_star = golden_section_maximize(value_at, 0.0, 1.0, 1e-10);
    if (contract.s_star < 1e-6 || contract.s_star > 1.0 - 1e-6)
      throw NoInteriorOptimumError(
          "residual-profit share converged to the boundary");
    // Golden section stalls once value differences fall below solver noise;
    // polish by bisecting the slope so first-order optimality holds tightly.
    {
      auto slope = [&](double s) {
        return central_difference(value_at, s, 1e-6);
      };
      const double r = 1e-4;
      double lo = std::max(contract.s_star - r, 1e-6);
      double hi = std::min(contract.s_star + r, 1.0 - 1e-6);
      if (slope(lo) > 0.0 && slope(hi) < 0.0) {
        for (int i = 0; i < 60; ++i) {
          const double mid = 0.5 * (lo + hi);
          if (slope(mid) > 0.0)
            lo = mid;
          else
            hi = mid;
        }
        contract.s_star = 0.5 * (lo + hi);
      }
    }
  }

  contract.shares = contract.s_star * unit.shares;
  contract.c = contract.s_star * unit.c;

  const EquityAllocation alloc(contract.shares);
  contract.equilibrium = solve_equilibrium(net, model, alloc);
  contract.balance = check_balance(net, alloc, contract.equilibrium);
  if (contract.balance.equity_spread > 1e-6 ||
      contract.balance.action_spread > 1e-6)
    throw SolverError("optimal contract failed the balance check");

  contract.value = objective == Objective::SuccessProbability
                       ? contract.equilibrium.success_prob
                       : contract.equilibrium.principal_value;
  contract.search = std::move(report);
  return contract;
}

}  // namespace equitynet
