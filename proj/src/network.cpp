#include "equitynet/network.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

namespace equitynet {

AgentSet::AgentSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InputError("agent set contains duplicates");
  if (!members_.empty() && members_.front() < 0)
    throw InputError("agent indices must be nonnegative");
}

AgentSet AgentSet::all(int n) {
  std::vector<int> m(static_cast<std::size_t>(std::max(0, n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return AgentSet(std::move(m));
}

bool AgentSet::contains(int agent) const {
  return std::binary_search(members_.begin(), members_.end(), agent);
}

int AgentSet::position_of(int agent) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), agent);
  if (it == members_.end() || *it != agent) return -1;
  return static_cast<int>(it - members_.begin());
}

std::uint64_t AgentSet::bitmask() const {
  std::uint64_t mask = 0;
  for (int i : members_) {
    if (i >= 64) throw InputError("bitmask only covers agents 0..63");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

WeightedNetwork::WeightedNetwork(Matrix weights)
    : weights_(std::move(weights)) {
  const auto n = weights_.rows();
  if (n == 0 || weights_.cols() != n)
    throw InputError("weight matrix must be square and nonempty");
  if (!weights_.allFinite())
    throw InputError("weight matrix has non-finite entries");
  if (weights_.minCoeff() < 0.0)
    throw InputError("link weights must be nonnegative");
  for (Eigen::Index i = 0; i < n; ++i)
    if (weights_(i, i) != 0.0)
      throw InputError("self-links are not allowed");
  if (weights_ != weights_.transpose()) {
    weights_ = ((weights_ + weights_.transpose()) / 2.0).eval();
    symmetrized_ = true;
  }
  if (weights_.maxCoeff() <= 0.0)
    throw InputError("network has no links");
}

WeightedNetwork restrict_to(const WeightedNetwork& net, const AgentSet& set) {
  if (set.empty()) throw EmptySetError("cannot restrict to an empty set");
  const auto& m = set.members();
  if (m.back() >= net.size())
    throw InputError("agent index out of range");
  Matrix sub(set.size(), set.size());
  for (int p = 0; p < set.size(); ++p)
    for (int q = 0; q < set.size(); ++q)
      sub(p, q) = net.weight(m[static_cast<std::size_t>(p)],
                             m[static_cast<std::size_t>(q)]);
  return WeightedNetwork(std::move(sub), WeightedNetwork::Unchecked{});
}

WeightedNetwork with_link(const WeightedNetwork& net, int i, int j, double w) {
  if (i == j) throw InputError("self-links are not allowed");
  if (i < 0 || j < 0 || i >= net.size() || j >= net.size())
    throw InputError("agent index out of range");
  if (!(w >= 0.0) || !std::isfinite(w))
    throw InputError("link weights must be nonnegative");
  Matrix m = net.weights();
  m(i, j) = w;
  m(j, i) = w;
  return WeightedNetwork(std::move(m), WeightedNetwork::Unchecked{});
}

std::optional<int> diameter(const WeightedNetwork& net, const AgentSet& set) {
  if (set.empty()) throw EmptySetError("diameter of an empty set");
  const auto& m = set.members();
  if (m.back() >= net.size())
    throw InputError("agent index out of range");
  const int k = set.size();
  if (k == 1) return 0;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (p != q && net.weight(m[static_cast<std::size_t>(p)],
                               m[static_cast<std::size_t>(q)]) >= kZeroWeightEps)
        adj[static_cast<std::size_t>(p)].push_back(q);

  int diam = 0;
  std::vector<int> dist(static_cast<std::size_t>(k));
  for (int src = 0; src < k; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::deque<int> queue{src};
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] >= 0) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
        queue.push_back(v);
        ++reached;
      }
    }
    if (reached < k) return std::nullopt;
  }
  return diam;
}

bool is_unweighted(const WeightedNetwork& net) {
  const Matrix& w = net.weights();
  return ((w.array() == 0.0) || (w.array() == 1.0)).all();
}

namespace {

// Branch and bound with a greedy colouring bound (candidates are expanded in
// reverse colour order, so the colour index bounds any clique inside the
// remaining candidates).
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<std::vector<char>>& adj)
      : adj_(adj) {}

  int max_size(std::vector<int> candidates, int stop_at) {
    best_ = 0;
    stop_at_ = stop_at;
    std::vector<int> r;
    expand(r, std::move(candidates));
    return best_;
  }

 private:
  void expand(std::vector<int>& r, std::vector<int> p) {
    if (best_ >= stop_at_) return;
    std::vector<int> ordered;
    std::vector<int> colour;
    ordered.reserve(p.size());
    colour.reserve(p.size());
    {
      int c = 0;
      std::vector<int> uncoloured = std::move(p);
      while (!uncoloured.empty()) {
        ++c;
        std::vector<int> rest;
        std::vector<int> cls;
        for (int v : uncoloured) {
          bool clash = false;
          for (int u : cls)
            if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
              clash = true;
              break;
            }
          (clash ? rest : cls).push_back(v);
        }
        for (int v : cls) {
          ordered.push_back(v);
          colour.push_back(c);
        }
        uncoloured = std::move(rest);
      }
    }
    for (int idx = static_cast<int>(ordered.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(r.size()) + colour[static_cast<std::size_t>(idx)] <= best_)
        return;
      const int v = ordered[static_cast<std::size_t>(idx)];
      r.push_back(v);
      std::vector<int> next;
      for (int jdx = 0; jdx < idx; ++jdx) {
        const int u = ordered[static_cast<std::size_t>(jdx)];
        if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
          next.push_back(u);
      }
      if (next.empty())
        best_ = std::max(best_, static_cast<int>(r.size()));
      else
        expand(r, std::move(next));
      r.pop_back();
      if (best_ >= stop_at_) return;
    }
  }

  const std::vector<std::vector<char>>& adj_;
  int best_ = 0;
  int stop_at_ = 0;
};

}  // namespace

AgentSet max_clique(const WeightedNetwork& net) {
  if (!is_unweighted(net))
    throw NotUnweightedError("max clique requires an unweighted network");
  const int n = net.size();
  std::vector<std::vector<char>> adj(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          net.weight(i, j) == 1.0 ? 1 : 0;

  CliqueSearch search(adj);
  std::vector<int> everyone(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) everyone[static_cast<std::size_t>(i)] = i;
  const int k = search.max_size(everyone, n + 1);

  // Lexicographically smallest maximum clique: greedily take the smallest
  // vertex whose neighbourhood still supports a completion.
  std::vector<int> clique;
  std::vector<int> cands = everyone;
  while (static_cast<int>(clique.size()) < k) {
    bool advanced = false;
    for (int v : cands) {
      std::vector<int> next;
      for (int u : cands)
        if (u != v && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
          next.push_back(u);
      const int need = k - static_cast<int>(clique.size()) - 1;
      if (need == 0 || search.max_size(next, need) >= need) {
        clique.push_back(v);
        cands = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw SolverError("clique extraction lost the incumbent");  // unreachable
  }
  return AgentSet(std::move(clique));
}

}  // namespace equitynet
