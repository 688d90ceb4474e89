#pragma once

#include <cstdint>
#include <random>

#include "equitynet/common.hpp"
#include "equitynet/network.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet::gen {

// Engine for an independent stream derived from (seed, stream).
std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) built from raw engine output, so draws do not
// depend on the standard library's distribution implementations.
double uniform01(std::mt19937_64& eng);
double uniform(std::mt19937_64& eng, double lo, double hi);
int uniform_int(std::mt19937_64& eng, int lo, int hi);  // inclusive

// Erdos-Renyi style networks; a (0,1) link is forced when the draw is empty.
WeightedNetwork random_weighted(std::mt19937_64& eng, int n, double edge_prob,
                                double w_lo = 0.2, double w_hi = 1.0);
WeightedNetwork random_unweighted(std::mt19937_64& eng, int n,
                                  double edge_prob);

// Uniform point on the unit simplex (exponential spacings).
Vector random_simplex(std::mt19937_64& eng, int n);

// Model draws restricted to ranges where small test networks keep the
// capped-linear family below its kink.
SuccessModel random_model(std::mt19937_64& eng, bool linear_family);

}  // namespace equitynet::gen
