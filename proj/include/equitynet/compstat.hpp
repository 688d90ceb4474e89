#pragma once

#include <vector>

#include "equitynet/common.hpp"
#include "equitynet/network.hpp"
#include "equitynet/objective.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet {

// A symmetric bump to the weight of link (j, k); both endpoints must be
// active under the contract being differentiated.
struct LinkPerturbation {
  int j = 0;
  int k = 0;
};

// Gradient of the optimal shares in the (j, k) link weight:
//   d sigma_i / d G_jk = -(W^{-1})_ik sigma_j - (W^{-1})_ij sigma_k
//                        + (dc/dG_jk) sigma_i / c
// with W the active-set weight matrix.  dc/dG_jk is closed-form under
// SuccessProbability (2 c^2 x_j x_k) and a central finite difference of the
// re-optimized pipeline under ResidualProfit.  Throws ActiveSetUnstable if
// the support changes within +-fd_step of the current weight.
Vector d_shares_d_weight(const WeightedNetwork& net, const SuccessModel& model,
                         const OptimalContract& contract, LinkPerturbation pert,
                         double fd_step = 1e-5,
                         const SearchOptions& opts = {});

// Envelope derivative of optimal equilibrium performance in G_ij:
// sigma_i* sigma_j* h(Y*) with
//   h = beta P'^2 (2/(1-beta c P')^3 + 1/(1-beta c P')^2)
//       / (1 - P'' s / (1-beta c P')^3).
double d_performance_d_weight(const WeightedNetwork& net,
                              const SuccessModel& model,
                              const OptimalContract& contract, int i, int j);

// Residual-profit total share as a function of beta, linear family.  The
// support (hence k_star) does not depend on beta, so one subset search
// serves the whole curve.
std::vector<double> total_share_curve(const WeightedNetwork& net, double alpha,
                                      const std::vector<double>& betas,
                                      const SearchOptions& opts = {});

}  // namespace equitynet
