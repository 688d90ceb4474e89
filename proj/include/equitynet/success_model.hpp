#pragma once

#include "equitynet/common.hpp"

namespace equitynet {

enum class SuccessFamily { CappedLinear, Saturating };

// Success probability P(Y) together with the complementarity strength beta.
//
// CappedLinear(alpha, cap): P(Y) = alpha * Y below the kink Y = cap/alpha.
// The capped branch is out of scope for every solver, so eval/deriv/
// second_deriv throw KinkReached at or past the kink instead of flattening.
// Saturating(kappa, lambda): P(Y) = kappa * (1 - exp(-lambda * Y)).
class SuccessModel {
 public:
  static SuccessModel capped_linear(double alpha, double cap, double beta);
  static SuccessModel saturating(double kappa, double lambda, double beta);

  SuccessFamily family() const { return family_; }
  double beta() const { return beta_; }
  bool linear() const { return family_ == SuccessFamily::CappedLinear; }
  // Slope of the linear family; rejects saturating models.
  double alpha() const;

  // Supremum of the performance domain on which eval/deriv are defined:
  // the kink cap/alpha for the linear family, +infinity otherwise.
  double domain_limit() const;

  SuccessModel with_beta(double beta) const;

  double eval(double y) const;
  double deriv(double y) const;
  double second_deriv(double y) const;

  // Total success curve: min(alpha*y, cap) for the linear family, eval
  // otherwise.  Deviation scans price actions past the kink with this.
  double eval_total(double y) const;

 private:
  SuccessModel(SuccessFamily family, double p0, double p1, double beta)
      : family_(family), p0_(p0), p1_(p1), beta_(beta) {}
  void guard(double y) const;

  SuccessFamily family_;
  double p0_;  // alpha or kappa
  double p1_;  // cap or lambda
  double beta_;
};

}  // namespace equitynet
