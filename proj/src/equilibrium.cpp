#include "equitynet/equilibrium.hpp"

#include <cmath>
#include <functional>

#include "equitynet/numeric.hpp"

namespace equitynet {

EquityAllocation::EquityAllocation(Vector shares) : shares_(std::move(shares)) {
  if (shares_.size() == 0) throw InputError("empty share vector");
  if (!shares_.allFinite() || shares_.minCoeff() < 0.0)
    throw InputError("shares must be nonnegative");
  if (shares_.sum() > 1.0 + kFeasibilitySlack)
    throw InputError("shares exceed the available equity");
}

AgentSet EquityAllocation::active_set() const {
  std::vector<int> m;
  for (int i = 0; i < size(); ++i)
    if (shares_(i) > kActiveShareEps) m.push_back(i);
  return AgentSet(std::move(m));
}

double team_performance(const WeightedNetwork& net, double beta,
                        const Vector& actions) {
  if (actions.size() != net.size())
    throw InputError("action vector length mismatch");
  return actions.sum() +
         0.5 * beta * actions.dot(net.weights() * actions);
}

namespace {

// Smallest y from which the best-response map is contracting:
// P'(y) * scale < 1.  Zero when that already holds at the origin.
double domain_edge(const SuccessModel& model, double scale) {
  if (model.deriv(0.0) * scale < 1.0) return 0.0;
  auto phi = [&](double y) { return model.deriv(y) * scale - 1.0; };
  return bisect_decreasing(phi, 0.0, 1.0, 1e-14);
}

// Lower bracket for a decreasing fixed-point residual f: starts just inside
// the domain and backs off toward the edge until f is nonnegative.
double lower_bracket(double edge, const std::function<double(double)>& f) {
  if (edge == 0.0) return 0.0;
  double delta = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double y = edge + delta;
    if (f(y) >= 0.0) return y;
    delta /= 2.0;
  }
  throw ConvergenceError("no valid lower bracket near the domain edge");
}

}  // namespace

EquilibriumResult solve_equilibrium(const WeightedNetwork& net,
                                    const SuccessModel& model,
                                    const EquityAllocation& alloc,
                                    double initial_upper) {
  const int n = net.size();
  if (alloc.size() != n) throw InputError("share vector length mismatch");
  const double beta = model.beta();
  const Vector& sigma = alloc.shares();
  const double rho = spectral_radius_product(sigma, net.weights());

  if (model.linear() && model.alpha() * beta * rho >= 1.0)
    throw NoEquilibriumLinearPError(
        "linear success model with alpha*beta*rho(Sigma G) >= 1 has no equilibrium");

  const Matrix sigma_g = sigma.asDiagonal() * net.weights();

  auto actions_at = [&](double y) -> Vector {
    const double dp = model.deriv(y);
    Matrix lhs = Matrix::Identity(n, n) - dp * beta * sigma_g;
    return Eigen::PartialPivLU<Matrix>(std::move(lhs)).solve((dp * sigma).eval());
  };
  std::function<double(double)> residual = [&](double y) {
    return team_performance(net, beta, actions_at(y)) - y;
  };

  const double edge = domain_edge(model, beta * rho);
  const double lo = lower_bracket(edge, residual);

  // Keep the bracket inside the model's domain: a capped-linear P is only
  // defined below its kink, so the upper end must never expand past it.  A
  // residual still positive at the domain's edge means the fixed point lies
  // beyond the kink, which the model cannot support.
  double hi = std::max(initial_upper, lo + 1.0);
  const double limit = model.domain_limit();
  if (std::isfinite(limit)) {
    const double hi_max = (1.0 - 1e-9) * limit;
    hi = std::min(hi, hi_max);
    if (residual(hi) > 0.0) {
      if (hi == hi_max || residual(hi_max) > 0.0)
        throw KinkReachedError(
            "equilibrium performance would reach the success cap");
      hi = hi_max;
    }
  }
  const double y_star = bisect_decreasing(residual, lo, hi);

  EquilibriumResult out;
  out.actions = actions_at(y_star);
  out.performance = y_star;
  out.success_prob = model.eval(y_star);
  out.agent_payoffs =
      (out.success_prob * sigma.array() - 0.5 * out.actions.array().square())
          .matrix();
  out.principal_value = (1.0 - sigma.sum()) * out.success_prob;

  const double dp = model.deriv(y_star);
  const Vector foc =
      out.actions -
      (dp * sigma.array() *
       (1.0 + beta * (net.weights() * out.actions).array()))
          .matrix();
  out.foc_residual = foc.cwiseAbs().maxCoeff();
  return out;
}

BonacichDiagnostics bonacich_diagnostics(const WeightedNetwork& net,
                                         const SuccessModel& model,
                                         const EquityAllocation& alloc,
                                         const EquilibriumResult& result) {
  const int n = net.size();
  if (alloc.size() != n || result.actions.size() != n)
    throw InputError("diagnostics size mismatch");
  const double beta = model.beta();
  const double dp = model.deriv(result.performance);
  const double rho = spectral_radius_product(alloc.shares(), net.weights());
  if (dp * beta * rho >= 1.0)
    throw SpectralInfeasibleError(
        "resolvent does not converge: P'(y*) beta rho(Sigma G) >= 1");

  const Matrix sigma_g = alloc.shares().asDiagonal() * net.weights();
  Matrix lhs = Matrix::Identity(n, n) - dp * beta * sigma_g;
  BonacichDiagnostics diag;
  diag.M = dp * Eigen::PartialPivLU<Matrix>(std::move(lhs))
                    .solve(Matrix::Identity(n, n));
  diag.b = diag.M.colwise().sum().transpose();
  diag.b_bar = diag.M.transpose() * diag.b;
  return diag;
}

double verify_nash(const WeightedNetwork& net, const SuccessModel& model,
                   const EquityAllocation& alloc,
                   const EquilibriumResult& result, int grid) {
  if (grid < 1) throw InputError("deviation grid must be positive");
  const double beta = model.beta();
  const double hi = 2.0 * result.actions.maxCoeff() + 1.0;
  double best = 0.0;
  Vector probe = result.actions;
  for (int i = 0; i < net.size(); ++i) {
    const double baseline = result.agent_payoffs(i);
    for (int g = 0; g <= grid; ++g) {
      const double d = hi * static_cast<double>(g) / grid;
      probe(i) = d;
      const double y = team_performance(net, beta, probe);
      const double payoff =
          model.eval_total(y) * alloc.share(i) - 0.5 * d * d;
      best = std::max(best, payoff - baseline);
    }
    probe(i) = result.actions(i);
  }
  return best;
}

}  // namespace equitynet
