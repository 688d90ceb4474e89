#include "equitynet/analytic_oracles.hpp"

#include <algorithm>
#include <cmath>

#include "equitynet/numeric.hpp"
#include "equitynet/random_instances.hpp"

namespace equitynet {

ThreeAgentContract three_agent_contract(const ThreeAgentSpec& spec, double s) {
  const double g13 = spec.g13;
  const double g23 = spec.g23;
  if (!std::isfinite(g13) || !std::isfinite(g23) || !(g23 > 0.0) ||
      g13 < g23 || g13 > 1.0)
    throw BadNormalizationError(
        "three-agent weights must satisfy 1 >= g13 >= g23 > 0");
  if (!(s > 0.0) || s > 1.0 + kFeasibilitySlack)
    throw InputError("total share must lie in (0, 1]");

  ThreeAgentContract contract;
  contract.shares = Vector::Zero(3);
  if (g13 + g23 > 1.0) {
    Vector x(3);
    x(0) = (1.0 + g13 - g23) / (2.0 * g13);
    x(1) = (1.0 + g23 - g13) / (2.0 * g23);
    x(2) = (g13 + g23 - 1.0) / (2.0 * g13 * g23);
    contract.active_set = AgentSet({0, 1, 2});
    contract.shares = (s / x.sum()) * x;
    const double denom =
        2.0 * (g23 + g13) - 1.0 - (g13 - g23) * (g13 - g23);
    contract.c = 2.0 * g13 * g23 * s / denom;
  } else {
    contract.active_set = AgentSet({0, 1});
    contract.shares(0) = 0.5 * s;
    contract.shares(1) = 0.5 * s;
    contract.c = 0.5 * s;
  }
  return contract;
}

double g_star(double g13) {
  if (!(g13 > 0.5) || !(g13 < 1.0))
    throw InputError("threshold is defined for g13 in (1/2, 1)");
  const double root = std::sqrt(1.0 - g13);
  return root * (std::sqrt(2.0) - root);
}

SpectralCertificate spectral_radius_certificate(const WeightedNetwork& net,
                                                const OptimalContract& contract,
                                                int trials,
                                                std::uint64_t seed) {
  if (contract.objective != Objective::SuccessProbability)
    throw InputError("certificate applies to success-probability contracts");
  if (trials <= 0) throw InputError("trial count must be positive");
  if (contract.shares.size() != net.size())
    throw InputError("contract does not match the network size");

  SpectralCertificate cert;
  cert.rho_star = spectral_radius_product(contract.shares, net.weights());
  cert.max_rival_rho = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto eng = gen::engine_for(seed, static_cast<std::uint64_t>(t));
    const Vector rival = gen::random_simplex(eng, net.size());
    cert.max_rival_rho = std::max(
        cert.max_rival_rho, spectral_radius_product(rival, net.weights()));
  }
  cert.margin = cert.rho_star - cert.max_rival_rho;
  return cert;
}

BenchmarkAllocation benchmark_optimum(BenchmarkFamily family, int n, double s) {
  if (!(s > 0.0) || s > 1.0 + kFeasibilitySlack)
    throw InputError("total share must lie in (0, 1]");
  BenchmarkAllocation alloc;
  switch (family) {
    case BenchmarkFamily::Clique:
      if (n < 2) throw InputError("clique needs at least two agents");
      alloc.shares = Vector::Constant(n, s / n);
      alloc.c = s * (n - 1) / n;
      return alloc;
    case BenchmarkFamily::CirculantPairs:
      if (n < 4 || n % 2 != 0)
        throw InputError("circulant family needs even n >= 4");
      alloc.shares = Vector::Constant(n, s / n);
      alloc.c = s * (n - 2) / n;
      return alloc;
    case BenchmarkFamily::Star:
      if (n < 3) throw InputError("star needs at least three agents");
      alloc.shares = Vector::Constant(n, 0.5 * s / (n - 1));
      alloc.shares(0) = 0.5 * s;
      alloc.c = 0.5 * s;
      return alloc;
  }
  throw InputError("unknown benchmark family");
}

WeightedNetwork benchmark_network(BenchmarkFamily family, int n) {
  Matrix g = Matrix::Zero(n, n);
  switch (family) {
    case BenchmarkFamily::Clique:
      if (n < 2) throw InputError("clique needs at least two agents");
      g.setOnes();
      g.diagonal().setZero();
      break;
    case BenchmarkFamily::CirculantPairs:
      if (n < 4 || n % 2 != 0)
        throw InputError("circulant family needs even n >= 4");
      g.setOnes();
      g.diagonal().setZero();
      for (int i = 0; i < n; ++i) g(i, (i + n / 2) % n) = 0.0;
      break;
    case BenchmarkFamily::Star:
      if (n < 3) throw InputError("star needs at least three agents");
      for (int i = 1; i < n; ++i) {
        g(0, i) = 1.0;
        g(i, 0) = 1.0;
      }
      break;
  }
  return WeightedNetwork(g);
}

}  // namespace equitynet
