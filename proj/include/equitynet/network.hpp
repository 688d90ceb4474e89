#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equitynet/common.hpp"

namespace equitynet {

// Sorted, duplicate-free collection of agent indices.
class AgentSet {
 public:
  AgentSet() = default;
  explicit AgentSet(std::vector<int> members);
  static AgentSet all(int n);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int agent) const;
  // Position of `agent` within the sorted member list, or -1.
  int position_of(int agent) const;
  std::uint64_t bitmask() const;

  bool operator==(const AgentSet&) const = default;

 private:
  std::vector<int> members_;
};

// Symmetric nonnegative interaction matrix with a zero diagonal.  Asymmetric
// input is replaced by (G + G^T)/2 and flagged so loaders can warn.
class WeightedNetwork {
 public:
  explicit WeightedNetwork(Matrix weights);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Matrix& weights() const { return weights_; }
  double weight(int i, int j) const { return weights_(i, j); }
  bool symmetrized_on_load() const { return symmetrized_; }

 private:
  struct Unchecked {};
  WeightedNetwork(Matrix weights, Unchecked) : weights_(std::move(weights)) {}

  Matrix weights_;
  bool symmetrized_ = false;

  friend WeightedNetwork restrict_to(const WeightedNetwork&, const AgentSet&);
  friend WeightedNetwork with_link(const WeightedNetwork&, int, int, double);
};

// Principal submatrix induced by `set`, in member order.
WeightedNetwork restrict_to(const WeightedNetwork& net, const AgentSet& set);

// Copy of `net` with the (i, j) link weight replaced on both sides.
WeightedNetwork with_link(const WeightedNetwork& net, int i, int j, double w);

// Hop-count diameter of the subgraph induced by `set`; links are entries
// >= kZeroWeightEps.  nullopt when the induced subgraph is disconnected.
std::optional<int> diameter(const WeightedNetwork& net, const AgentSet& set);

// True iff every weight is exactly 0 or 1.
bool is_unweighted(const WeightedNetwork& net);

// Exact maximum clique (branch and bound with a greedy colouring bound).
// Among maximum cliques, returns the lexicographically smallest member list.
AgentSet max_clique(const WeightedNetwork& net);

}  // namespace equitynet
