#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace equitynet {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Shares at or below this threshold count as inactive.
inline constexpr double kActiveShareEps = 1e-9;

// Link weights below this are exact zeros for connectivity purposes.
inline constexpr double kZeroWeightEps = 1e-12;

// Subnetworks whose balance system is conditioned worse than this are rejected.
inline constexpr double kSingularCondLimit = 1e12;

// Rounding slack allowed on the sum-of-shares feasibility constraint.
inline constexpr double kFeasibilitySlack = 1e-9;

// Relative tolerance under which candidate active sets are reported as ties.
inline constexpr double kTieTol = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or infeasible user input: bad files, bad schemas, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// Numerical or structural failure inside a solver.
class SolverError : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public InputError {
 public:
  using InputError::InputError;
};

class NotUnweightedError : public InputError {
 public:
  using InputError::InputError;
};

class NegativePerformanceError : public InputError {
 public:
  using InputError::InputError;
};

class BadNormalizationError : public InputError {
 public:
  using InputError::InputError;
};

class TooLargeForEnumerationError : public InputError {
 public:
  using InputError::InputError;
};

// Capped-linear success model asked for a value at or past its kink.
class KinkReachedError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Linear success model with spillover feedback strong enough that best
// responses diverge: alpha * beta * rho(Sigma G) >= 1.
class NoEquilibriumLinearPError : public SolverError {
 public:
  using SolverError::SolverError;
};

class SpectralInfeasibleError : public SolverError {
 public:
  using SolverError::SolverError;
};

class SingularSubnetworkError : public SolverError {
 public:
  using SolverError::SolverError;
};

class InvalidActiveSetError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ActiveSetUnstableError : public SolverError {
 public:
  using SolverError::SolverError;
};

class InfeasibleComplementarityError : public SolverError {
 public:
  using SolverError::SolverError;
};

class NoInteriorOptimumError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ConvergenceError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace equitynet
