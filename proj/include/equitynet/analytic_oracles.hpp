#pragma once

#include <cstdint>

#include "equitynet/common.hpp"
#include "equitynet/network.hpp"
#include "equitynet/objective.hpp"

namespace equitynet {

// Three agents with G_01 = 1 (the normalization), G_02 = g13, G_12 = g23,
// ordered 1 >= g13 >= g23 > 0.
struct ThreeAgentSpec {
  double g13 = 0.0;
  double g23 = 0.0;
};

struct ThreeAgentContract {
  AgentSet active_set;
  Vector shares;  // length 3
  double c = 0.0;
};

// Closed-form optimal allocation of total s.  All three agents are active
// iff g13 + g23 > 1; otherwise the optimum splits s evenly across the unit
// link {0, 1}.
ThreeAgentContract three_agent_contract(const ThreeAgentSpec& spec, double s);

// Threshold weight sqrt(1-g13) (sqrt(2) - sqrt(1-g13)) at which the response
// of the share ratio sigma_0/sigma_1 to the weak link changes sign.
// Defined for g13 in (1/2, 1); the value lies in (1 - g13, g13).
double g_star(double g13);

struct SpectralCertificate {
  double rho_star = 0.0;       // spectral radius of Sigma* G
  double max_rival_rho = 0.0;  // best rho over sampled feasible rivals
  double margin = 0.0;         // rho_star - max_rival_rho
};

// Monte-Carlo check that the success-probability optimum maximizes the
// spectral radius of Sigma G over the simplex.  Rivals are sampled with
// exponential spacings; trial t uses an engine seeded from (seed, t), so a
// fixed seed gives a bitwise-reproducible certificate.
SpectralCertificate spectral_radius_certificate(const WeightedNetwork& net,
                                                const OptimalContract& contract,
                                                int trials, std::uint64_t seed);

enum class BenchmarkFamily {
  Clique,        // complete graph: equal shares, c = s (n-1)/n
  CirculantPairs,  // even n, links except antipodal pairs: c = s (n-2)/n
  Star,          // centre 0: centre holds s/2, leaves split the rest, c = s/2
};

struct BenchmarkAllocation {
  Vector shares;
  double c = 0.0;
};

// Closed-form optimal c and a witness allocation for the benchmark families.
BenchmarkAllocation benchmark_optimum(BenchmarkFamily family, int n, double s);

// Unit-weight adjacency matching each benchmark family (star centre is 0).
WeightedNetwork benchmark_network(BenchmarkFamily family, int n);

}  // namespace equitynet
