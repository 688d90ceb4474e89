#include "equitynet/success_model.hpp"

#include <cmath>
#include <limits>

namespace equitynet {

SuccessModel SuccessModel::capped_linear(double alpha, double cap,
                                         double beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InputError("capped_linear: alpha must be positive");
  if (!(cap > 0.0) || !(cap < 1.0))
    throw InputError("capped_linear: cap must lie in (0, 1)");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InputError("beta must be positive");
  return SuccessModel(SuccessFamily::CappedLinear, alpha, cap, beta);
}

SuccessModel SuccessModel::saturating(double kappa, double lambda,
                                      double beta) {
  if (!(kappa > 0.0) || !(kappa < 1.0))
    throw InputError("saturating: kappa must lie in (0, 1)");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InputError("saturating: lambda must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InputError("beta must be positive");
  return SuccessModel(SuccessFamily::Saturating, kappa, lambda, beta);
}

double SuccessModel::alpha() const {
  if (family_ != SuccessFamily::CappedLinear)
    throw InputError("alpha is only defined for the capped-linear family");
  return p0_;
}

double SuccessModel::domain_limit() const {
  if (family_ == SuccessFamily::CappedLinear) return p1_ / p0_;
  return std::numeric_limits<double>::infinity();
}

SuccessModel SuccessModel::with_beta(double beta) const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InputError("beta must be positive");
  return SuccessModel(family_, p0_, p1_, beta);
}

void SuccessModel::guard(double y) const {
  if (!(y >= 0.0))
    throw NegativePerformanceError("success model evaluated at negative performance");
  if (family_ == SuccessFamily::CappedLinear && p0_ * y >= p1_)
    throw KinkReachedError("capped-linear model evaluated at or past its kink");
}

double SuccessModel::eval(double y) const {
  guard(y);
  if (family_ == SuccessFamily::CappedLinear) return p0_ * y;
  return p0_ * (1.0 - std::exp(-p1_ * y));
}

double SuccessModel::deriv(double y) const {
  guard(y);
  if (family_ == SuccessFamily::CappedLinear) return p0_;
  return p0_ * p1_ * std::exp(-p1_ * y);
}

double SuccessModel::second_deriv(double y) const {
  guard(y);
  if (family_ == SuccessFamily::CappedLinear) return 0.0;
  return -p0_ * p1_ * p1_ * std::exp(-p1_ * y);
}

double SuccessModel::eval_total(double y) const {
  if (!(y >= 0.0))
    throw NegativePerformanceError("success model evaluated at negative performance");
  if (family_ == SuccessFamily::CappedLinear) return std::min(p0_ * y, p1_);
  return p0_ * (1.0 - std::exp(-p1_ * y));
}

}  // namespace equitynet
