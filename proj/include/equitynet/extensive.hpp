#pragma once

#include <vector>

#include "equitynet/common.hpp"
#include "equitynet/intensive.hpp"
#include "equitynet/network.hpp"

namespace equitynet {

struct SearchOptions {
  int max_n_enum = 16;        // refuse subset enumeration above this size
  bool prune_diameter = true; // skip sets of hop diameter > 2 (sound: no
                              // optimal support is wider than that)
};

enum class SearchMethod { Enumeration, Clique };

struct ActiveSetCandidate {
  AgentSet set;
  double c_per_unit = 0.0;  // balanced constant at total share 1
  IntensiveSolution solution;
};

struct SearchReport {
  ActiveSetCandidate best;
  // Other candidates within kTieTol (relative) of best, enumeration order.
  std::vector<ActiveSetCandidate> ties;
  long evaluated = 0;
  long pruned_by_diameter = 0;
  SearchMethod method = SearchMethod::Enumeration;
};

// Exhaustive search over supports, by cardinality then lexicographic order.
// Singletons are excluded a priori (their balanced constant is zero).  The
// reported best is the first enumerated candidate within tie tolerance of
// the maximum, i.e. smallest cardinality, then lexicographic.
SearchReport search_active_set(const WeightedNetwork& net,
                               const SearchOptions& opts = {});

// Fast path for unweighted networks: the optimum is a maximum clique with
// equal shares and c = (k - 1)/k.
SearchReport search_active_set_unweighted(const WeightedNetwork& net);

// Reference search with no pruning and no singleton skip; n <= 12.
SearchReport brute_force_oracle(const WeightedNetwork& net);

}  // namespace equitynet
