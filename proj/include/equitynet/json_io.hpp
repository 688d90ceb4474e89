#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "equitynet/common.hpp"
#include "equitynet/equilibrium.hpp"
#include "equitynet/network.hpp"
#include "equitynet/objective.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet::io {

// {"n": int, "edges": [[i, j, w], ...]} or {"n": int, "matrix": [row-major]}.
// Duplicate (unordered) edges are an error; an asymmetric matrix is averaged
// with a warning on `warn`.
WeightedNetwork network_from_json(const nlohmann::json& j,
                                  std::ostream* warn = nullptr);
WeightedNetwork load_network(const std::filesystem::path& path,
                             std::ostream* warn = nullptr);

// {"family": "capped_linear", "alpha": a, "cap": c, "beta": b} or
// {"family": "saturating", "kappa": k, "lambda": l, "beta": b}.
SuccessModel model_from_json(const nlohmann::json& j);
SuccessModel load_model(const std::filesystem::path& path);

// JSON array of n nonnegative reals.
Vector shares_from_json(const nlohmann::json& j);
Vector load_shares(const std::filesystem::path& path);

nlohmann::json to_json(const EquilibriumResult& result);
nlohmann::json to_json(const OptimalContract& contract);

}  // namespace equitynet::io
