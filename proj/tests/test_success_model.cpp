#include <cmath>

#include "doctest.h"
#include "equitynet/success_model.hpp"

using namespace equitynet;

TEST_CASE("capped-linear model below the kink") {
  SuccessModel m = SuccessModel::capped_linear(0.9, 0.95, 0.4);
  CHECK(m.family() == SuccessFamily::CappedLinear);
  CHECK(m.linear());
  CHECK(m.alpha() == 0.9);
  CHECK(m.beta() == 0.4);
  CHECK(m.eval(0.5) == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(m.eval(0.0) == 0.0);
  CHECK(m.deriv(0.5) == 0.9);
  CHECK(m.second_deriv(0.5) == 0.0);
  CHECK(m.eval_total(0.5) == doctest::Approx(0.45).epsilon(1e-15));
}

TEST_CASE("capped-linear model refuses its kink but eval_total flattens") {
  SuccessModel m = SuccessModel::capped_linear(0.9, 0.95, 0.4);
  const double kink = 0.95 / 0.9;
  CHECK_THROWS_AS(m.eval(kink), KinkReachedError);
  CHECK_THROWS_AS(m.eval(kink + 1.0), KinkReachedError);
  CHECK_THROWS_AS(m.deriv(kink), KinkReachedError);
  CHECK_THROWS_AS(m.second_deriv(kink), KinkReachedError);
  CHECK_NOTHROW(m.eval(kink - 1e-9));
  CHECK(m.eval_total(kink) == 0.95);
  CHECK(m.eval_total(50.0) == 0.95);
  CHECK(m.eval_total(0.1) == doctest::Approx(0.09).epsilon(1e-15));
}

TEST_CASE("saturating model matches its closed form") {
  SuccessModel m = SuccessModel::saturating(0.9, 1.0, 0.2);
  CHECK(m.family() == SuccessFamily::Saturating);
  CHECK_FALSE(m.linear());
  CHECK(m.eval(0.0) == 0.0);
  CHECK(m.eval(1.0) == 0.5689085029457019);
  CHECK(m.deriv(1.0) == 0.33109149705429813);
  CHECK(m.second_deriv(1.0) == doctest::Approx(-0.33109149705429813)
                                   .epsilon(1e-15));
  CHECK(m.eval_total(1.0) == m.eval(1.0));
  // No kink: large arguments stay in range and approach kappa.
  CHECK(m.eval(80.0) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK_THROWS_AS(m.alpha(), InputError);
}

TEST_CASE("negative performance is rejected everywhere") {
  SuccessModel lin = SuccessModel::capped_linear(0.5, 0.9, 1.0);
  SuccessModel sat = SuccessModel::saturating(0.5, 2.0, 1.0);
  CHECK_THROWS_AS(lin.eval(-0.1), NegativePerformanceError);
  CHECK_THROWS_AS(lin.eval_total(-0.1), NegativePerformanceError);
  CHECK_THROWS_AS(sat.deriv(-1.0), NegativePerformanceError);
  CHECK_THROWS_AS(sat.second_deriv(-1e-12), NegativePerformanceError);
  CHECK_THROWS_AS(lin.eval(std::nan("")), NegativePerformanceError);
}

TEST_CASE("model parameters are validated") {
  CHECK_THROWS_AS(SuccessModel::capped_linear(0.0, 0.9, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::capped_linear(-0.5, 0.9, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::capped_linear(0.5, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::capped_linear(0.5, 0.0, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::capped_linear(0.5, 0.9, 0.0), InputError);
  CHECK_THROWS_AS(SuccessModel::saturating(1.0, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::saturating(0.5, -2.0, 1.0), InputError);
  CHECK_THROWS_AS(SuccessModel::saturating(0.5, 2.0, -1.0), InputError);
}

TEST_CASE("with_beta rebinds only the complementarity strength") {
  SuccessModel m = SuccessModel::capped_linear(0.9, 0.95, 0.4);
  SuccessModel m2 = m.with_beta(1.5);
  CHECK(m2.beta() == 1.5);
  CHECK(m2.alpha() == 0.9);
  CHECK(m2.eval(0.5) == m.eval(0.5));
  CHECK(m.beta() == 0.4);
  CHECK_THROWS_AS(m.with_beta(0.0), InputError);
}
