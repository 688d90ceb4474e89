#include "equitynet/intensive.hpp"

#include <cmath>
#include <functional>

#include "equitynet/numeric.hpp"

namespace equitynet {

Vector equity_centrality(const WeightedNetwork& subnet) {
  const int k = subnet.size();
  const Matrix& w = subnet.weights();
  // Balance systems may be singular yet consistent: agents with identical
  // neighbourhoods (a star's leaves, antipodal agents in the ten-agent
  // circulant) duplicate rows of W.  The minimal-norm solution is the
  // canonical representative, and k* = 1'x is the same for every solution
  // because the all-ones vector is orthogonal to the kernel of a symmetric
  // matrix whenever the system is solvable.  Singular values below
  // 1/kSingularCondLimit of the largest are treated as zero.
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(w);
  cod.setThreshold(1.0 / kSingularCondLimit);
  const Vector ones = Vector::Ones(k);
  Vector x = cod.solve(ones);
  x += cod.solve((ones - w * x).eval());  // one step of iterative refinement
  if (!x.allFinite())
    throw SingularSubnetworkError("balance system produced non-finite centrality");
  if ((w * x - ones).cwiseAbs().maxCoeff() > 1e-9)
    throw SingularSubnetworkError("balance system has no solution on this set");
  return x;
}

IntensiveSolution allocate_on_set(const WeightedNetwork& net,
                                  const AgentSet& set, double s) {
  if (!(s > 0.0) || s > 1.0 + kFeasibilitySlack)
    throw InputError("total share must lie in (0, 1]");
  IntensiveSolution sol;
  sol.centrality = equity_centrality(restrict_to(net, set));
  if (sol.centrality.minCoeff() <= kActiveShareEps)
    throw InvalidActiveSetError("balanced shares are not strictly positive");
  sol.active = set;
  sol.k_star = sol.centrality.sum();
  sol.c = s / sol.k_star;
  sol.total = s;
  sol.shares = Vector::Zero(net.size());
  const auto& m = set.members();
  for (int p = 0; p < set.size(); ++p)
    sol.shares(m[static_cast<std::size_t>(p)]) = sol.c * sol.centrality(p);
  return sol;
}

double predicted_performance(const SuccessModel& model, double s, double c) {
  if (s == 0.0) return 0.0;
  const double beta = model.beta();

  // A linear success function makes the fixed-point map constant in y, so
  // the solution is the map's value itself (or nothing when the slope
  // condition fails).
  if (model.linear()) {
    const double dp = model.alpha();
    const double q = 1.0 - dp * beta * c;
    if (q <= 0.0)
      throw NoEquilibriumLinearPError(
          "linear success model with alpha*beta*c >= 1 has no balanced equilibrium");
    const double y = s * (dp / q + beta * dp * dp * c / (2.0 * q * q));
    model.deriv(y);  // surfaces the kink guard at the predicted level
    return y;
  }

  auto fixed_point_gap = [&](double y) {
    const double dp = model.deriv(y);
    const double q = 1.0 - beta * dp * c;
    return s * (dp / q + beta * dp * dp * c / (2.0 * q * q)) - y;
  };

  double edge = 0.0;
  if (model.deriv(0.0) * beta * c >= 1.0) {
    auto phi = [&](double y) { return model.deriv(y) * beta * c - 1.0; };
    edge = bisect_decreasing(phi, 0.0, 1.0, 1e-14);
  }
  double lo = 0.0;
  if (edge > 0.0) {
    double delta = 1.0;
    lo = edge + delta;
    for (int i = 0; i < 200 && fixed_point_gap(lo) < 0.0; ++i) {
      delta /= 2.0;
      lo = edge + delta;
    }
  }
  // Bracket-width stop so downstream optimizers see a smooth value map.
  return bisect_decreasing(fixed_point_gap, lo, std::max(1.0, lo + 1.0), 1e-13,
                           4e-16);
}

PredictedEquilibrium predicted_equilibrium(const WeightedNetwork& net,
                                           const SuccessModel& model,
                                           const IntensiveSolution& sol) {
  if (sol.shares.size() != net.size())
    throw InputError("solution does not match the network size");
  PredictedEquilibrium pred;
  pred.performance = predicted_performance(model, sol.total, sol.c);
  const double dp = model.deriv(pred.performance);
  pred.mu = dp / (1.0 - dp * model.beta() * sol.c);
  pred.actions = pred.mu * sol.shares;
  return pred;
}

namespace {

double spread_over_active(const Vector& values, const AgentSet& active) {
  if (active.empty()) return 0.0;
  double mean = 0.0;
  for (int i : active.members()) mean += values(i);
  mean /= active.size();
  double spread = 0.0;
  for (int i : active.members())
    spread = std::max(spread, std::abs(values(i) - mean));
  return spread;
}

}  // namespace

BalanceReport check_balance(const WeightedNetwork& net,
                            const EquityAllocation& alloc,
                            const EquilibriumResult& result) {
  if (alloc.size() != net.size() || result.actions.size() != net.size())
    throw InputError("balance check size mismatch");
  const AgentSet active = alloc.active_set();
  BalanceReport report;
  report.equity_spread =
      spread_over_active(net.weights() * alloc.shares(), active);
  report.action_spread =
      spread_over_active(net.weights() * result.actions, active);
  return report;
}

}  // namespace equitynet
