#pragma once

#include "equitynet/common.hpp"
#include "equitynet/equilibrium.hpp"
#include "equitynet/extensive.hpp"
#include "equitynet/intensive.hpp"
#include "equitynet/network.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet {

enum class Objective {
  ResidualProfit,       // max (1 - sum sigma) P(Y*)
  SuccessProbability,   // max P(Y*) subject to sum sigma <= 1
};

struct OptimalContract {
  Objective objective = Objective::SuccessProbability;
  Vector shares;          // sigma*, full length
  AgentSet active_set;
  Vector centrality;      // x on the active set
  double c = 0.0;         // balanced constant at s_star
  double k_star = 0.0;
  double s_star = 0.0;    // total equity granted
  double value = 0.0;     // optimal objective value
  EquilibriumResult equilibrium;
  BalanceReport balance;
  SearchReport search;
};

// Extensive + intensive margins.  The support comes from the subset search
// (clique fast path for unweighted networks too large to enumerate); under
// SuccessProbability the whole pie is granted, under ResidualProfit the
// total is a golden-section maximizer of (1 - s) P(Y*(s)).
OptimalContract optimize(const WeightedNetwork& net, const SuccessModel& model,
                         Objective objective, const SearchOptions& opts = {});

// Residual-profit total share for the linear family: unique root in
// (1/2, 1) of
//   p(s) = -(beta alpha)^2 s^3 + 3 beta alpha k s^2 - 4 k^2 s + 2 k^2,
// bisected to 1e-12.  Requires beta * alpha < k_star.
double rp_linear_closed_form(double k_star, double alpha, double beta);

}  // namespace equitynet
