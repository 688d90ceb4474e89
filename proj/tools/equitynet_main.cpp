#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "equitynet/equilibrium.hpp"
#include "equitynet/json_io.hpp"
#include "equitynet/objective.hpp"
#include "equitynet/sweep.hpp"
#include "equitynet/verification.hpp"

namespace {

using namespace equitynet;

Objective parse_objective(const std::string& s) {
  if (s == "rp") return Objective::ResidualProfit;
  if (s == "sp") return Objective::SuccessProbability;
  throw InputError("objective must be \"rp\" or \"sp\"");
}

int env_threads() {
  const char* raw = std::getenv("EQUITYNET_THREADS");
  if (!raw)
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 4096)
    throw InputError("EQUITYNET_THREADS must be a positive integer");
  return static_cast<int>(v);
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw InputError("failed while writing " + out_path);
}

int parse_strict_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw InputError(what);
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(what);
  }
}

double parse_strict_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InputError(what);
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(what);
  }
}

SweepSpec parse_sweep_spec(const std::string& param, const std::string& range,
                           int steps) {
  SweepSpec spec;
  spec.steps = steps;
  if (param == "beta") {
    spec.param = SweepSpec::Param::Beta;
  } else if (param.rfind("link:", 0) == 0) {
    spec.param = SweepSpec::Param::Link;
    const std::string rest = param.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size())
      throw InputError("--param link form is link:i:j");
    spec.i = parse_strict_int(rest.substr(0, colon), "--param link form is link:i:j");
    spec.j = parse_strict_int(rest.substr(colon + 1), "--param link form is link:i:j");
  } else {
    throw InputError("--param must be \"beta\" or \"link:i:j\"");
  }
  const auto colon = range.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == range.size())
    throw InputError("--range form is LO:HI");
  spec.lo = parse_strict_double(range.substr(0, colon), "--range form is LO:HI");
  spec.hi = parse_strict_double(range.substr(colon + 1), "--range form is LO:HI");
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "equitynet: equity contracts and effort equilibria on "
      "complementarity networks"};
  app.require_subcommand(1);

  std::string network_path, model_path, shares_path, out_path;
  std::string objective_s, param_s, range_s;
  int steps = 100;
  std::uint64_t seed = 1;

  CLI::App* c_eq = app.add_subcommand(
      "equilibrium",
      "Solve the effort Nash equilibrium for a fixed share vector; writes "
      "JSON {actions, performance, success_prob, agent_payoffs, "
      "principal_value, foc_residual}");
  c_eq->add_option("--network", network_path, "network JSON path")->required();
  c_eq->add_option("--model", model_path, "success-model JSON path")->required();
  c_eq->add_option("--shares", shares_path,
                   "shares JSON path (array of n nonnegative reals, sum <= 1)")
      ->required();
  c_eq->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* c_opt = app.add_subcommand(
      "optimize", "Find the optimal equity contract; writes JSON");
  c_opt->add_option("--network", network_path, "network JSON path")->required();
  c_opt->add_option("--model", model_path, "success-model JSON path")->required();
  c_opt->add_option("--objective", objective_s,
                    "rp (residual profit) or sp (success probability)")
      ->required();
  c_opt->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* c_sweep = app.add_subcommand(
      "sweep",
      "Re-optimize the contract across a parameter grid; writes CSV with "
      "columns: param, sigma_0..sigma_{n-1}, payoff_0..payoff_{n-1}, "
      "performance, c, s_star, active_mask.  Failed points become NaN rows "
      "with a warning on stderr.  EQUITYNET_THREADS caps parallelism.");
  c_sweep->add_option("--network", network_path, "network JSON path")->required();
  c_sweep->add_option("--model", model_path, "success-model JSON path")->required();
  c_sweep->add_option("--objective", objective_s,
                      "rp (residual profit) or sp (success probability)")
      ->required();
  c_sweep->add_option("--param", param_s, "swept parameter: beta or link:i:j")
      ->required();
  c_sweep->add_option("--range", range_s, "parameter range LO:HI")->required();
  c_sweep->add_option("--steps", steps, "number of grid points (default 100)");
  c_sweep->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* c_verify = app.add_subcommand(
      "verify",
      "Run the full verification suite (equilibrium, balance, search, "
      "closed forms, derivatives, invariance, spectral certificates); "
      "prints one pass/fail line per check and exits 1 on any failure");
  c_verify->add_option("--seed", seed, "base seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_eq)) {
      const WeightedNetwork net = io::load_network(network_path, &std::cerr);
      const SuccessModel model = io::load_model(model_path);
      const Vector shares = io::load_shares(shares_path);
      if (shares.size() != net.size())
        throw InputError("share vector length does not match the network");
      const EquityAllocation alloc(shares);
      const EquilibriumResult result = solve_equilibrium(net, model, alloc);
      write_text(out_path, io::to_json(result).dump(2) + "\n");
    } else if (app.got_subcommand(c_opt)) {
      const WeightedNetwork net = io::load_network(network_path, &std::cerr);
      const SuccessModel model = io::load_model(model_path);
      const OptimalContract contract =
          optimize(net, model, parse_objective(objective_s));
      write_text(out_path, io::to_json(contract).dump(2) + "\n");
    } else if (app.got_subcommand(c_sweep)) {
      const WeightedNetwork net = io::load_network(network_path, &std::cerr);
      const SuccessModel model = io::load_model(model_path);
      const SweepSpec spec = parse_sweep_spec(param_s, range_s, steps);
      const std::vector<SweepPoint> points = run_sweep(
          net, model, parse_objective(objective_s), spec, env_threads());
      for (std::size_t k = 0; k < points.size(); ++k)
        if (!points[k].ok)
          std::cerr << "warning: sweep point " << k << " at parameter "
                    << points[k].value << " failed: " << points[k].error
                    << "\n";
      std::ostringstream csv;
      write_sweep_csv(csv, points, net.size());
      write_text(out_path, csv.str());
    } else {
      return verify::run_and_report(std::cout, seed) == 0 ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
