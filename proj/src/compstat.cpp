#include "equitynet/compstat.hpp"

#include <cmath>

#include "equitynet/extensive.hpp"
#include "equitynet/intensive.hpp"
#include "equitynet/numeric.hpp"

namespace equitynet {

namespace {

void probe_support(const WeightedNetwork& net, const SuccessModel& model,
                   const OptimalContract& contract, LinkPerturbation pert,
                   double step, const SearchOptions& opts) {
  const double w0 = net.weight(pert.j, pert.k);
  for (double w : {w0 - step, w0 + step}) {
    const WeightedNetwork bumped = with_link(net, pert.j, pert.k, w);
    const OptimalContract re = optimize(bumped, model, contract.objective, opts);
    if (!(re.active_set == contract.active_set))
      throw ActiveSetUnstableError(
          "active set changed under the link perturbation");
  }
}

double rp_c_derivative(const WeightedNetwork& net, const SuccessModel& model,
                       const OptimalContract& contract, LinkPerturbation pert,
                       double fd_step, const SearchOptions& opts) {
  auto c_at = [&](double w) {
    const WeightedNetwork bumped = with_link(net, pert.j, pert.k, w);
    const OptimalContract re =
        optimize(bumped, model, Objective::ResidualProfit, opts);
    if (!(re.active_set == contract.active_set))
      throw ActiveSetUnstableError(
          "active set changed under the link perturbation");
    return re.c;
  };
  return fd_derivative(c_at, net.weight(pert.j, pert.k), fd_step);
}

}  // namespace

Vector d_shares_d_weight(const WeightedNetwork& net, const SuccessModel& model,
                         const OptimalContract& contract, LinkPerturbation pert,
                         double fd_step, const SearchOptions& opts) {
  const int n = net.size();
  if (pert.j < 0 || pert.j >= n || pert.k < 0 || pert.k >= n ||
      pert.j == pert.k)
    throw InputError("link perturbation endpoints out of range");
  const AgentSet& active = contract.active_set;
  if (!active.contains(pert.j) || !active.contains(pert.k))
    throw InputError("link perturbation endpoints must be active");
  if (!(fd_step > 0.0)) throw InputError("finite-difference step must be positive");
  if (net.weight(pert.j, pert.k) < 10.0 * fd_step)
    throw InputError("link weight too small for the finite-difference step");
  probe_support(net, model, contract, pert, fd_step, opts);

  const WeightedNetwork sub = restrict_to(net, active);
  Eigen::PartialPivLU<Matrix> lu(sub.weights());
  if (!(lu.rcond() > 1.0 / kSingularCondLimit))
    throw SingularSubnetworkError("balance system is singular or near-singular");
  const Matrix w_inv = lu.inverse();

  const int pj = active.position_of(pert.j);
  const int pk = active.position_of(pert.k);
  const double c = contract.c;
  const Vector x = contract.centrality;

  double dc;
  if (contract.objective == Objective::SuccessProbability)
    dc = 2.0 * c * c * x(pj) * x(pk);
  else
    dc = rp_c_derivative(net, model, contract, pert, fd_step, opts);

  Vector grad = Vector::Zero(n);
  const auto& members = active.members();
  for (int p = 0; p < active.size(); ++p) {
    const int i = members[static_cast<std::size_t>(p)];
    const double sigma_i = contract.shares(i);
    grad(i) = -w_inv(p, pk) * contract.shares(pert.j) -
              w_inv(p, pj) * contract.shares(pert.k) + dc * sigma_i / c;
  }
  return grad;
}

double d_performance_d_weight(const WeightedNetwork& net,
                              const SuccessModel& model,
                              const OptimalContract& contract, int i, int j) {
  const int n = net.size();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw InputError("link endpoints out of range");
  const double y = contract.equilibrium.performance;
  const double dp = model.deriv(y);
  const double d2p = model.second_deriv(y);
  const double beta = model.beta();
  const double d = 1.0 - beta * contract.c * dp;
  if (d <= 0.0)
    throw SolverError("slope denominator vanished at the optimal contract");
  const double d3 = d * d * d;
  const double numer = beta * dp * dp * (2.0 / d3 + 1.0 / (d * d));
  const double denom = 1.0 - d2p * contract.s_star / d3;
  if (denom <= 0.0)
    throw SolverError("implicit performance derivative is not well posed");
  return contract.shares(i) * contract.shares(j) * numer / denom;
}

std::vector<double> total_share_curve(const WeightedNetwork& net, double alpha,
                                      const std::vector<double>& betas,
                                      const SearchOptions& opts) {
  if (!(alpha > 0.0)) throw InputError("alpha must be positive");
  SearchReport report;
  if (net.size() <= opts.max_n_enum)
    report = search_active_set(net, opts);
  else if (is_unweighted(net))
    report = search_active_set_unweighted(net);
  else
    throw TooLargeForEnumerationError(
        "weighted network too large for subset enumeration");
  const double k_star = report.best.solution.k_star;

  std::vector<double> curve;
  curve.reserve(betas.size());
  for (double beta : betas) {
    if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
    curve.push_back(rp_linear_closed_form(k_star, alpha, beta));
  }
  return curve;
}

}  // namespace equitynet
