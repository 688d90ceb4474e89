#pragma once

#include "equitynet/common.hpp"
#include "equitynet/equilibrium.hpp"
#include "equitynet/network.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet {

// Balanced equity allocation on a fixed active set: every active agent's
// neighbourhood holds the same aggregate equity c.
struct IntensiveSolution {
  Vector shares;      // full length, zero off the active set
  AgentSet active;
  Vector centrality;  // x = W^{-1} 1 on the active set, member order
  double c = 0.0;     // common neighbourhood equity, c = s / k_star
  double k_star = 0.0;  // 1' W^{-1} 1
  double total = 0.0;   // s
};

// Solves W x = 1 for the restricted weight matrix W, returning the
// minimal-norm solution so that singular-but-consistent systems (duplicate
// neighbourhoods) still yield their canonical balanced allocation; k* = 1'x
// does not depend on the choice of solution.  Systems with no solution, or
// whose rank decision falls below 1/kSingularCondLimit, are rejected.
Vector equity_centrality(const WeightedNetwork& subnet);

// Balanced allocation with total s on `set`: sigma = (s / k_star) x embedded
// into the full index space.  Rejects sets whose centrality is not strictly
// positive (InvalidActiveSet).
IntensiveSolution allocate_on_set(const WeightedNetwork& net,
                                  const AgentSet& set, double s);

struct PredictedEquilibrium {
  double mu = 0.0;     // action per unit share, P'(Y*) / (1 - P'(Y*) beta c)
  Vector actions;      // mu * sigma
  double performance = 0.0;  // Y*
};

// Scalar fixed point for Y* under a balanced allocation:
//   y = s (P'(y)/(1 - beta P'(y) c) + beta P'(y)^2 c / (2 (1 - beta P'(y) c)^2)).
double predicted_performance(const SuccessModel& model, double s, double c);

// Equilibrium of a balanced allocation without touching the matrix solver.
PredictedEquilibrium predicted_equilibrium(const WeightedNetwork& net,
                                           const SuccessModel& model,
                                           const IntensiveSolution& sol);

struct BalanceReport {
  double equity_spread = 0.0;  // max_i |(G sigma)_i - mean| over active i
  double action_spread = 0.0;  // max_i |(G a*)_i - mean| over active i
};

BalanceReport check_balance(const WeightedNetwork& net,
                            const EquityAllocation& alloc,
                            const EquilibriumResult& result);

}  // namespace equitynet
