#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "equitynet/sweep.hpp"

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

std::string csv_of(const std::vector<SweepPoint>& points, int n) {
  std::ostringstream out;
  write_sweep_csv(out, points, n);
  return out.str();
}

SweepSpec beta_spec(double lo, double hi, int steps) {
  SweepSpec spec;
  spec.param = SweepSpec::Param::Beta;
  spec.lo = lo;
  spec.hi = hi;
  spec.steps = steps;
  return spec;
}

SweepSpec link_spec(int i, int j, double lo, double hi, int steps) {
  SweepSpec spec;
  spec.param = SweepSpec::Param::Link;
  spec.i = i;
  spec.j = j;
  spec.lo = lo;
  spec.hi = hi;
  spec.steps = steps;
  return spec;
}

const SuccessModel kLinear = SuccessModel::capped_linear(0.5, 0.95, 0.5);

}  // namespace

TEST_CASE("degenerate grids collapse to a single point") {
  WeightedNetwork net = pair_net();
  auto one = run_sweep(net, kLinear, Objective::SuccessProbability,
                       beta_spec(0.5, 2.0, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == 0.5);
  CHECK(one[0].ok);

  auto flat = run_sweep(net, kLinear, Objective::SuccessProbability,
                        beta_spec(0.5, 0.5, 7));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].value == 0.5);
}

TEST_CASE("sweep specs are validated") {
  WeightedNetwork net = pair_net();
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            beta_spec(0.0, 1.0, 5)),
                  InputError);
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            beta_spec(1.0, 0.5, 5)),
                  InputError);
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            beta_spec(0.5, 1.0, 0)),
                  InputError);
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            link_spec(0, 0, 0.1, 0.5, 3)),
                  InputError);
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            link_spec(0, 2, 0.1, 0.5, 3)),
                  InputError);
  CHECK_THROWS_AS(run_sweep(net, kLinear, Objective::SuccessProbability,
                            link_spec(0, 1, -0.1, 0.5, 3)),
                  InputError);
}

TEST_CASE("the residual-profit share rises along a beta sweep") {
  WeightedNetwork net = pair_net();
  auto points = run_sweep(net, kLinear, Objective::ResidualProfit,
                          beta_spec(0.1, 1.5, 15));
  REQUIRE(points.size() == 15);
  for (std::size_t k = 0; k < points.size(); ++k) {
    CAPTURE(k);
    REQUIRE(points[k].ok);
    CHECK(points[k].active_mask == 3);
    CHECK(points[k].s_star > 0.5);
    if (k > 0) CHECK(points[k].s_star > points[k - 1].s_star);
  }
}

TEST_CASE("link sweeps re-optimize the contract at each weight") {
  WeightedNetwork net = triangle(0.8, 0.5);
  SuccessModel m = SuccessModel::capped_linear(0.3, 0.95, 0.2);
  auto points = run_sweep(net, m, Objective::SuccessProbability,
                          link_spec(1, 2, 0.3, 0.7, 5));
  REQUIRE(points.size() == 5);
  for (const auto& p : points) {
    REQUIRE(p.ok);
    CHECK(p.active_mask == 7);
    CHECK(p.s_star == 1.0);
  }
  CHECK(points[0].value == 0.3);
  CHECK(points[4].value == 0.7);
  // Strengthening the weak link shifts equity toward agent 2.
  CHECK(points[4].shares(2) > points[0].shares(2));
  CHECK(points[4].c > points[0].c);
}

TEST_CASE("failed points carry their error and render as NaN rows") {
  WeightedNetwork net = pair_net();
  SuccessModel steep = SuccessModel::capped_linear(0.9, 0.95, 0.2);
  // Large beta drives the predicted level past the kink, then past the
  // divergence threshold; both failure modes land in the error column.
  auto points = run_sweep(net, steep, Objective::SuccessProbability,
                          beta_spec(0.05, 2.45, 13));
  REQUIRE(points.size() == 13);
  CHECK(points.front().ok);
  CHECK_FALSE(points.back().ok);
  CHECK_FALSE(points.back().error.empty());

  const std::string csv = csv_of(points, 2);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "param,sigma_0,sigma_1,payoff_0,payoff_1,performance,c,s_star,"
        "active_mask");
  int rows = 0, nan_rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find("nan,nan") != std::string::npos) ++nan_rows;
  }
  CHECK(rows == 13);
  CHECK(nan_rows >= 1);
  // A failed row ends with the NaN active-mask sentinel.
  CHECK(csv.find(",nan\n") != std::string::npos);
}

TEST_CASE("sweeps are deterministic and thread-count invariant") {
  WeightedNetwork net = triangle(0.8, 0.6);
  SuccessModel m = SuccessModel::capped_linear(0.5, 0.95, 0.5);
  const SweepSpec spec = beta_spec(0.1, 1.2, 24);

  const std::string a =
      csv_of(run_sweep(net, m, Objective::ResidualProfit, spec, 1), 3);
  const std::string b =
      csv_of(run_sweep(net, m, Objective::ResidualProfit, spec, 1), 3);
  const std::string c =
      csv_of(run_sweep(net, m, Objective::ResidualProfit, spec, 4), 3);
  const std::string d =
      csv_of(run_sweep(net, m, Objective::ResidualProfit, spec, 0), 3);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == d);  // thread counts are clamped, not rejected

  CHECK_THROWS_AS(write_sweep_csv(std::cout, {}, 0), InputError);
}
