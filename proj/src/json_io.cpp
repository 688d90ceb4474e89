#include "equitynet/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

namespace equitynet::io {

namespace {

nlohmann::json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InputError(std::string("missing numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

nlohmann::json vector_to_json(const Vector& v) {
  return nlohmann::json(
      std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace

WeightedNetwork network_from_json(const nlohmann::json& j,
                                  std::ostream* warn) {
  if (!j.is_object()) throw InputError("network document must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw InputError("network needs an integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InputError("agent count must be positive");
  const bool has_edges = j.contains("edges");
  const bool has_matrix = j.contains("matrix");
  if (has_edges == has_matrix)
    throw InputError("network needs exactly one of \"edges\" or \"matrix\"");

  Matrix g = Matrix::Zero(n, n);
  if (has_edges) {
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw InputError("\"edges\" must be an array");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3 || !e.at(0).is_number_integer() ||
          !e.at(1).is_number_integer() || !e.at(2).is_number())
        throw InputError("each edge must be [i, j, w]");
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      const double w = e.at(2).get<double>();
      if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw InputError("edge endpoints out of range");
      if (!std::isfinite(w) || w < 0.0)
        throw InputError("edge weights must be finite and nonnegative");
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
        throw InputError("duplicate edge in network document");
      g(a, b) = w;
      g(b, a) = w;
    }
  } else {
    const auto& cells = j.at("matrix");
    if (!cells.is_array() ||
        cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InputError("\"matrix\" must hold n*n numbers row-major");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const auto& cell = cells.at(static_cast<std::size_t>(i) * n + k);
        if (!cell.is_number()) throw InputError("matrix entries must be numbers");
        g(i, k) = cell.get<double>();
      }
  }

  WeightedNetwork net(g);
  if (net.symmetrized_on_load() && warn)
    *warn << "warning: asymmetric adjacency averaged with its transpose\n";
  return net;
}

WeightedNetwork load_network(const std::filesystem::path& path,
                             std::ostream* warn) {
  return network_from_json(parse_file(path), warn);
}

SuccessModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw InputError("model document needs a string field \"family\"");
  const std::string family = j.at("family").get<std::string>();
  if (family == "capped_linear")
    return SuccessModel::capped_linear(number_field(j, "alpha"),
                                       number_field(j, "cap"),
                                       number_field(j, "beta"));
  if (family == "saturating")
    return SuccessModel::saturating(number_field(j, "kappa"),
                                    number_field(j, "lambda"),
                                    number_field(j, "beta"));
  throw InputError("unknown model family \"" + family + "\"");
}

SuccessModel load_model(const std::filesystem::path& path) {
  return model_from_json(parse_file(path));
}

Vector shares_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("shares document must be a nonempty array");
  Vector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j.at(i).is_number()) throw InputError("shares must be numbers");
    v(static_cast<int>(i)) = j.at(i).get<double>();
  }
  return v;
}

Vector load_shares(const std::filesystem::path& path) {
  return shares_from_json(parse_file(path));
}

nlohmann::json to_json(const EquilibriumResult& result) {
  return nlohmann::json{{"actions", vector_to_json(result.actions)},
                        {"performance", result.performance},
                        {"success_prob", result.success_prob},
                        {"agent_payoffs", vector_to_json(result.agent_payoffs)},
                        {"principal_value", result.principal_value},
                        {"foc_residual", result.foc_residual}};
}

nlohmann::json to_json(const OptimalContract& contract) {
  nlohmann::json ties = nlohmann::json::array();
  for (const auto& tie : contract.search.ties)
    ties.push_back({{"active_set", tie.set.members()},
                    {"c_per_unit", tie.c_per_unit}});
  return nlohmann::json{
      {"objective", contract.objective == Objective::ResidualProfit ? "rp" : "sp"},
      {"active_set", contract.active_set.members()},
      {"shares", vector_to_json(contract.shares)},
      {"centrality", vector_to_json(contract.centrality)},
      {"c", contract.c},
      {"k_star", contract.k_star},
      {"s_star", contract.s_star},
      {"value", contract.value},
      {"equilibrium", to_json(contract.equilibrium)},
      {"balance",
       {{"equity_spread", contract.balance.equity_spread},
        {"action_spread", contract.balance.action_spread}}},
      {"ties", ties},
      {"search",
       {{"method", contract.search.method == SearchMethod::Clique
                       ? "clique"
                       : "enumeration"},
        {"evaluated", contract.search.evaluated},
        {"pruned_by_diameter", contract.search.pruned_by_diameter}}}};
}

}  // namespace equitynet::io
