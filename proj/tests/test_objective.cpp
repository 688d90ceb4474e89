#include <cmath>

#include "doctest.h"
#include "equitynet/numeric.hpp"
#include "equitynet/objective.hpp"
#include "equitynet/random_instances.hpp"

using namespace equitynet;

namespace {

WeightedNetwork pair_net() {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = w(1, 0) = 1.0;
  return WeightedNetwork(std::move(w));
}

WeightedNetwork triangle(double g13, double g23) {
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = w(1, 0) = 1.0;
  w(0, 2) = w(2, 0) = g13;
  w(1, 2) = w(2, 1) = g23;
  return WeightedNetwork(std::move(w));
}

WeightedNetwork complete_graph(int n) {
  Matrix w = Matrix::Ones(n, n);
  w.diagonal().setZero();
  return WeightedNetwork(std::move(w));
}

}  // namespace

TEST_CASE("success-probability contract grants the whole pie") {
  WeightedNetwork net = pair_net();
  SuccessModel m = SuccessModel::capped_linear(0.5, 0.95, 0.5);
  OptimalContract contract = optimize(net, m, Objective::SuccessProbability);

  CHECK(contract.objective == Objective::SuccessProbability);
  CHECK(contract.s_star == 1.0);
  CHECK(contract.active_set == AgentSet::all(2));
  CHECK(contract.shares(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(contract.c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(contract.k_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(contract.value == doctest::Approx(15.0 / 49).epsilon(1e-11));
  CHECK(contract.equilibrium.performance ==
        doctest::Approx(30.0 / 49).epsilon(1e-11));
  CHECK(contract.balance.equity_spread <= 1e-9);
  CHECK(contract.balance.action_spread <= 1e-9);
}

TEST_CASE("success-probability contract on the weighted triangle") {
  OptimalContract contract =
      optimize(triangle(0.8, 0.6), SuccessModel::capped_linear(0.3, 0.95, 0.2),
               Objective::SuccessProbability);
  CHECK(contract.active_set == AgentSet::all(3));
  CHECK(contract.shares(0) == doctest::Approx(9.0 / 22).epsilon(1e-10));
  CHECK(contract.shares(1) == doctest::Approx(8.0 / 22).epsilon(1e-10));
  CHECK(contract.shares(2) == doctest::Approx(5.0 / 22).epsilon(1e-10));
  CHECK(contract.c == doctest::Approx(6.0 / 11).epsilon(1e-10));
  CHECK(contract.k_star == doctest::Approx(11.0 / 6).epsilon(1e-10));
  CHECK(contract.value ==
        doctest::Approx(contract.equilibrium.success_prob).epsilon(1e-14));
}

TEST_CASE("residual-profit share matches the cubic closed form") {
  WeightedNetwork net = pair_net();
  SuccessModel m = SuccessModel::capped_linear(0.5, 0.95, 0.5);
  OptimalContract contract = optimize(net, m, Objective::ResidualProfit);

  CHECK(contract.objective == Objective::ResidualProfit);
  CHECK(std::abs(contract.s_star - 0.525303500794962) <= 1e-8);
  CHECK(contract.shares(0) ==
        doctest::Approx(0.5 * contract.s_star).epsilon(1e-12));
  CHECK(contract.value ==
        doctest::Approx(contract.equilibrium.principal_value).epsilon(1e-14));
  CHECK(contract.value > 0.0);

  OptimalContract tri = optimize(triangle(0.8, 0.6), m, Objective::ResidualProfit);
  CHECK(std::abs(tri.s_star -
                 rp_linear_closed_form(tri.k_star, 0.5, 0.5)) <= 1e-8);
}

TEST_CASE("residual-profit optimum is first-order stationary") {
  WeightedNetwork net = pair_net();
  SuccessModel m = SuccessModel::saturating(0.8, 1.0, 0.25);
  OptimalContract contract = optimize(net, m, Objective::ResidualProfit);
  CHECK(contract.s_star > 0.01);
  CHECK(contract.s_star < 0.99);
  const double k_star = contract.k_star;
  auto value_at = [&](double s) {
    const double y = predicted_performance(m, s, s / k_star);
    return (1.0 - s) * m.eval(y);
  };
  CHECK(std::abs(central_difference(value_at, contract.s_star, 1e-6)) <= 1e-7);
  CHECK(contract.value >= value_at(contract.s_star - 0.01) - 1e-12);
  CHECK(contract.value >= value_at(contract.s_star + 0.01) - 1e-12);
}

TEST_CASE("rp_linear_closed_form roots and guards") {
  const double root = rp_linear_closed_form(2.0, 0.5, 0.5);
  CHECK(std::abs(root - 0.525303500794962) <= 1e-9);
  // It really is a root of the cubic.
  const double ba = 0.25, k = 2.0;
  const double p = -ba * ba * root * root * root + 3.0 * ba * k * root * root -
                   4.0 * k * k * root + 2.0 * k * k;
  CHECK(std::abs(p) <= 1e-10);

  CHECK(rp_linear_closed_form(2.0, 0.5, 0.0) == 0.5);
  CHECK(rp_linear_closed_form(2.0, 0.5, 0.1) <
        rp_linear_closed_form(2.0, 0.5, 0.5));
  CHECK(rp_linear_closed_form(2.0, 0.5, 0.5) <
        rp_linear_closed_form(2.0, 0.5, 1.5));
  CHECK(rp_linear_closed_form(2.0, 0.5, 1.5) < 1.0);

  CHECK_THROWS_AS(rp_linear_closed_form(0.5, 1.0, 0.6),
                  InfeasibleComplementarityError);
  CHECK_THROWS_AS(rp_linear_closed_form(0.0, 0.5, 0.5), InputError);
  CHECK_THROWS_AS(rp_linear_closed_form(2.0, -0.5, 0.5), InputError);
  CHECK_THROWS_AS(rp_linear_closed_form(2.0, 0.5, -0.5), InputError);
}

TEST_CASE("large unweighted networks fall back to the clique fast path") {
  OptimalContract contract =
      optimize(complete_graph(20), SuccessModel::capped_linear(0.3, 0.95, 0.2),
               Objective::SuccessProbability);
  CHECK(contract.search.method == SearchMethod::Clique);
  CHECK(contract.active_set == AgentSet::all(20));
  CHECK(contract.shares(7) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(contract.c == doctest::Approx(0.95).epsilon(1e-12));
  CHECK(contract.value > 0.0);
  CHECK(contract.balance.equity_spread <= 1e-9);
}

TEST_CASE("large weighted networks are rejected") {
  auto eng = gen::engine_for(42, 7);
  WeightedNetwork big = gen::random_weighted(eng, 17, 0.4);
  CHECK_THROWS_AS(
      optimize(big, SuccessModel::capped_linear(0.3, 0.95, 0.2),
               Objective::SuccessProbability),
      TooLargeForEnumerationError);
}
