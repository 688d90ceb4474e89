#pragma once

#include "equitynet/common.hpp"
#include "equitynet/network.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet {

// Nonnegative equity shares with total at most one.
class EquityAllocation {
 public:
  explicit EquityAllocation(Vector shares);

  const Vector& shares() const { return shares_; }
  double share(int i) const { return shares_(i); }
  int size() const { return static_cast<int>(shares_.size()); }
  double total() const { return shares_.sum(); }
  AgentSet active_set() const;

 private:
  Vector shares_;
};

struct EquilibriumResult {
  Vector actions;         // a*
  double performance;     // Y*
  double success_prob;    // P(Y*)
  Vector agent_payoffs;   // P(Y*) sigma_i - a_i^2 / 2
  double principal_value; // (1 - sum sigma) P(Y*)
  double foc_residual;    // max_i |a_i - P'(Y*) sigma_i (1 + beta (G a)_i)|
};

// Y(a) = sum_i a_i + (beta/2) a' G a.
double team_performance(const WeightedNetwork& net, double beta,
                        const Vector& actions);

// Unique Nash equilibrium of the effort game.  The equilibrium performance
// solves F(y) = Y(a(y)) - y = 0 with a(y) = [I - P'(y) beta Sigma G]^{-1}
// P'(y) sigma; F is strictly decreasing, so the root is bisected.
// initial_upper seeds the upper-bracket search (result is independent of it).
EquilibriumResult solve_equilibrium(const WeightedNetwork& net,
                                    const SuccessModel& model,
                                    const EquityAllocation& alloc,
                                    double initial_upper = 1.0);

struct BonacichDiagnostics {
  Matrix M;      // P'(y*) [I - beta P'(y*) Sigma G]^{-1}
  Vector b;      // column sums of M
  Vector b_bar;  // b_bar_i = sum_j M_ji b_j
};

BonacichDiagnostics bonacich_diagnostics(const WeightedNetwork& net,
                                         const SuccessModel& model,
                                         const EquityAllocation& alloc,
                                         const EquilibriumResult& result);

// Largest payoff improvement any single agent can reach by deviating to a
// grid of `grid` intervals on [0, 2 max_i a_i* + 1].  Clamped at zero, so a
// verified equilibrium returns 0.
double verify_nash(const WeightedNetwork& net, const SuccessModel& model,
                   const EquityAllocation& alloc,
                   const EquilibriumResult& result, int grid = 1000);

}  // namespace equitynet
