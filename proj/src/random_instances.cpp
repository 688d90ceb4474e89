#include "equitynet/random_instances.hpp"

#include <cmath>

#include "equitynet/numeric.hpp"

namespace equitynet::gen {

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) + stream));
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

int uniform_int(std::mt19937_64& eng, int lo, int hi) {
  if (hi < lo) throw InputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(eng() % span);
}

WeightedNetwork random_weighted(std::mt19937_64& eng, int n, double edge_prob,
                                double w_lo, double w_hi) {
  if (n < 2) throw InputError("random networks need at least two agents");
  if (!(edge_prob >= 0.0) || !(edge_prob <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  if (!(w_lo > 0.0) || !(w_hi >= w_lo))
    throw InputError("weight range must satisfy 0 < w_lo <= w_hi");
  Matrix g = Matrix::Zero(n, n);
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(eng) < edge_prob) {
        const double w = uniform(eng, w_lo, w_hi);
        g(i, j) = w;
        g(j, i) = w;
        any = true;
      }
  if (!any) {
    const double w = uniform(eng, w_lo, w_hi);
    g(0, 1) = w;
    g(1, 0) = w;
  }
  return WeightedNetwork(g);
}

WeightedNetwork random_unweighted(std::mt19937_64& eng, int n,
                                  double edge_prob) {
  if (n < 2) throw InputError("random networks need at least two agents");
  if (!(edge_prob >= 0.0) || !(edge_prob <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  Matrix g = Matrix::Zero(n, n);
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(eng) < edge_prob) {
        g(i, j) = 1.0;
        g(j, i) = 1.0;
        any = true;
      }
  if (!any) {
    g(0, 1) = 1.0;
    g(1, 0) = 1.0;
  }
  return WeightedNetwork(g);
}

Vector random_simplex(std::mt19937_64& eng, int n) {
  if (n < 1) throw InputError("simplex dimension must be positive");
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = -std::log(1.0 - uniform01(eng));
  const double total = v.sum();
  if (!(total > 0.0)) return Vector::Constant(n, 1.0 / n);
  return v / total;
}

SuccessModel random_model(std::mt19937_64& eng, bool linear_family) {
  const double beta = uniform(eng, 0.05, 0.25);
  if (linear_family) {
    const double alpha = uniform(eng, 0.2, 0.5);
    return SuccessModel::capped_linear(alpha, 0.95, beta);
  }
  const double kappa = uniform(eng, 0.5, 0.9);
  const double lambda = uniform(eng, 0.5, 1.5);
  return SuccessModel::saturating(kappa, lambda, beta);
}

}  // namespace equitynet::gen
