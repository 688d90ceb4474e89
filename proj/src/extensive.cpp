#include "equitynet/extensive.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace equitynet {

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

SearchReport enumerate_supports(const WeightedNetwork& net, bool prune_diameter,
                                bool skip_singletons, int max_n) {
  const int n = net.size();
  if (n > max_n)
    throw TooLargeForEnumerationError(
        "network too large for subset enumeration");

  SearchReport report;
  report.method = SearchMethod::Enumeration;
  std::vector<ActiveSetCandidate> near_best;  // enumeration order
  double c_max = -1.0;

  const int k_min = skip_singletons ? 2 : 1;
  for (int k = k_min; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      AgentSet set(idx);
      if (k == 1) {
        // A lone agent has no equity-holding neighbours: c is zero, which
        // never beats any feasible pair, so no candidate is stored.
        ++report.evaluated;
        continue;
      }
      if (prune_diameter) {
        const auto d = diameter(net, set);
        if (!d || *d > 2) {
          ++report.pruned_by_diameter;
          continue;
        }
      }
      ++report.evaluated;
      ActiveSetCandidate cand;
      try {
        cand.solution = allocate_on_set(net, set, 1.0);
      } catch (const InvalidActiveSetError&) {
        continue;
      } catch (const SingularSubnetworkError&) {
        continue;
      }
      cand.set = std::move(set);
      cand.c_per_unit = cand.solution.c;
      if (cand.c_per_unit > c_max) {
        c_max = cand.c_per_unit;
        const double keep = c_max - kTieTol * std::abs(c_max);
        std::erase_if(near_best, [keep](const ActiveSetCandidate& a) {
          return a.c_per_unit < keep;
        });
      }
      if (cand.c_per_unit >= c_max - kTieTol * std::abs(c_max))
        near_best.push_back(std::move(cand));
    } while (next_combination(idx, n));
  }

  if (near_best.empty())
    throw SolverError("no feasible active set in this network");
  report.best = std::move(near_best.front());
  report.ties.assign(std::make_move_iterator(near_best.begin() + 1),
                     std::make_move_iterator(near_best.end()));
  return report;
}

}  // namespace

SearchReport search_active_set(const WeightedNetwork& net,
                               const SearchOptions& opts) {
  return enumerate_supports(net, opts.prune_diameter, /*skip_singletons=*/true,
                            opts.max_n_enum);
}

SearchReport brute_force_oracle(const WeightedNetwork& net) {
  return enumerate_supports(net, /*prune_diameter=*/false,
                            /*skip_singletons=*/false, /*max_n=*/12);
}

SearchReport search_active_set_unweighted(const WeightedNetwork& net) {
  const AgentSet clique = max_clique(net);
  const int k = clique.size();
  if (k < 2)
    throw SolverError("no feasible active set in this network");

  // The clique optimum in closed form: equal shares, x = 1/(k-1).
  IntensiveSolution sol;
  sol.active = clique;
  sol.centrality = Vector::Constant(k, 1.0 / (k - 1));
  sol.k_star = static_cast<double>(k) / (k - 1);
  sol.c = static_cast<double>(k - 1) / k;
  sol.total = 1.0;
  sol.shares = Vector::Zero(net.size());
  for (int agent : clique.members()) sol.shares(agent) = 1.0 / k;

  SearchReport report;
  report.method = SearchMethod::Clique;
  report.evaluated = 1;
  report.best.set = clique;
  report.best.c_per_unit = sol.c;
  report.best.solution = std::move(sol);
  return report;
}

}  // namespace equitynet
