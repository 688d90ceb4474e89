#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "equitynet/json_io.hpp"
#include "equitynet/objective.hpp"

using namespace equitynet;
using nlohmann::json;

TEST_CASE("networks load from edge lists") {
  json doc = {{"n", 3},
              {"edges", {{0, 1, 1.0}, {0, 2, 0.8}, {1, 2, 0.6}}}};
  WeightedNetwork net = io::network_from_json(doc);
  CHECK(net.size() == 3);
  CHECK(net.weight(0, 1) == 1.0);
  CHECK(net.weight(2, 0) == 0.8);
  CHECK(net.weight(1, 2) == 0.6);
  CHECK_FALSE(net.symmetrized_on_load());
}

TEST_CASE("networks load from row-major matrices") {
  json doc = {{"n", 2}, {"matrix", {0.0, 0.7, 0.7, 0.0}}};
  WeightedNetwork net = io::network_from_json(doc);
  CHECK(net.weight(0, 1) == 0.7);

  std::ostringstream warn;
  json skew = {{"n", 2}, {"matrix", {0.0, 1.0, 0.5, 0.0}}};
  WeightedNetwork averaged = io::network_from_json(skew, &warn);
  CHECK(averaged.weight(0, 1) == doctest::Approx(0.75));
  CHECK(averaged.symmetrized_on_load());
  CHECK(warn.str().find("asymmetric") != std::string::npos);
}

TEST_CASE("malformed network documents are rejected") {
  CHECK_THROWS_AS(io::network_from_json(json::array()), InputError);
  CHECK_THROWS_AS(io::network_from_json(json{{"edges", json::array()}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(json{{"n", 0}, {"edges", json::array()}}),
                  InputError);
  CHECK_THROWS_AS(
      io::network_from_json(json{{"n", 2},
                                 {"edges", {{0, 1, 1.0}}},
                                 {"matrix", {0.0, 1.0, 1.0, 0.0}}}),
      InputError);
  CHECK_THROWS_AS(io::network_from_json(json{{"n", 2}}), InputError);
  // Duplicate edge, also when given with swapped endpoints.
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"edges", {{0, 1, 1.0}, {1, 0, 0.5}}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"edges", {{0, 2, 1.0}}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"edges", {{0, 0, 1.0}}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"edges", {{0, 1, -1.0}}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"edges", {{0, 1}}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"matrix", {0.0, 1.0, 1.0}}}),
                  InputError);
  CHECK_THROWS_AS(io::network_from_json(
                      json{{"n", 2}, {"matrix", {0.0, "x", 1.0, 0.0}}}),
                  InputError);
}

TEST_CASE("models parse by family") {
  SuccessModel lin = io::model_from_json(json{{"family", "capped_linear"},
                                              {"alpha", 0.5},
                                              {"cap", 0.95},
                                              {"beta", 0.5}});
  CHECK(lin.linear());
  CHECK(lin.alpha() == 0.5);
  CHECK(lin.beta() == 0.5);

  SuccessModel sat = io::model_from_json(json{{"family", "saturating"},
                                              {"kappa", 0.9},
                                              {"lambda", 1.0},
                                              {"beta", 0.2}});
  CHECK_FALSE(sat.linear());
  CHECK(sat.eval(1.0) == 0.5689085029457019);

  CHECK_THROWS_AS(io::model_from_json(json{{"family", "quadratic"}}),
                  InputError);
  CHECK_THROWS_AS(io::model_from_json(json{{"family", "capped_linear"},
                                           {"alpha", 0.5},
                                           {"beta", 0.5}}),
                  InputError);
  CHECK_THROWS_AS(io::model_from_json(json{{"family", "capped_linear"},
                                           {"alpha", "big"},
                                           {"cap", 0.95},
                                           {"beta", 0.5}}),
                  InputError);
  CHECK_THROWS_AS(io::model_from_json(json::array()), InputError);
}

TEST_CASE("share vectors parse from arrays") {
  Vector v = io::shares_from_json(json{0.4, 0.0, 0.3});
  CHECK(v.size() == 3);
  CHECK(v(0) == 0.4);
  CHECK(v(2) == 0.3);
  CHECK_THROWS_AS(io::shares_from_json(json::array()), InputError);
  CHECK_THROWS_AS(io::shares_from_json(json{{"a", 1}}), InputError);
  CHECK_THROWS_AS(io::shares_from_json(json{0.5, "x"}), InputError);
}

TEST_CASE("results serialize with stable keys") {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = w(1, 0) = 1.0;
  WeightedNetwork net(w);
  SuccessModel m = SuccessModel::capped_linear(0.5, 0.95, 0.5);

  Vector shares(2);
  shares << 0.5, 0.5;
  EquilibriumResult r = solve_equilibrium(net, m, EquityAllocation(shares));
  json jr = io::to_json(r);
  CHECK(jr.at("performance").get<double>() ==
        doctest::Approx(30.0 / 49).epsilon(1e-11));
  CHECK(jr.at("actions").size() == 2);
  CHECK(jr.at("agent_payoffs").at(1).get<double>() ==
        doctest::Approx(11.0 / 98).epsilon(1e-11));
  CHECK(jr.contains("success_prob"));
  CHECK(jr.contains("principal_value"));
  CHECK(jr.contains("foc_residual"));

  OptimalContract contract = optimize(net, m, Objective::SuccessProbability);
  json jc = io::to_json(contract);
  CHECK(jc.at("objective") == "sp");
  CHECK(jc.at("active_set") == json({0, 1}));
  CHECK(jc.at("s_star").get<double>() == 1.0);
  CHECK(jc.at("c").get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(jc.at("k_star").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(jc.at("search").at("method") == "enumeration");
  CHECK(jc.at("ties").is_array());
  CHECK(jc.at("equilibrium").at("performance").get<double>() ==
        doctest::Approx(30.0 / 49).epsilon(1e-11));

  OptimalContract rp = optimize(net, m, Objective::ResidualProfit);
  CHECK(io::to_json(rp).at("objective") == "rp");
}

TEST_CASE("file loaders surface filesystem and parse errors") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "equitynet_json_io_test";
  fs::create_directories(dir);

  CHECK_THROWS_AS(io::load_network(dir / "missing.json"), InputError);
  CHECK_THROWS_AS(io::load_model(dir / "missing.json"), InputError);
  CHECK_THROWS_AS(io::load_shares(dir / "missing.json"), InputError);

  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(io::load_network(bad), InputError);

  const fs::path good = dir / "net.json";
  std::ofstream(good) << R"({"n": 2, "edges": [[0, 1, 1.0]]})";
  WeightedNetwork net = io::load_network(good);
  CHECK(net.weight(0, 1) == 1.0);

  const fs::path shares = dir / "shares.json";
  std::ofstream(shares) << "[0.25, 0.25]";
  CHECK(io::load_shares(shares).sum() == doctest::Approx(0.5));

  fs::remove_all(dir);
}
