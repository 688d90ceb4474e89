#include "equitynet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

namespace equitynet {

namespace {

std::vector<double> parameter_grid(const SweepSpec& spec) {
  if (spec.steps < 1) throw InputError("sweep needs at least one step");
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || spec.hi < spec.lo)
    throw InputError("sweep range must be finite with lo <= hi");
  if (spec.steps == 1 || spec.hi == spec.lo)
    return std::vector<double>{spec.lo};
  std::vector<double> grid(static_cast<std::size_t>(spec.steps));
  const double width = spec.hi - spec.lo;
  for (int k = 0; k < spec.steps; ++k)
    grid[static_cast<std::size_t>(k)] =
        spec.lo + width * k / (spec.steps - 1);
  return grid;
}

SweepPoint evaluate_point(const WeightedNetwork& net, const SuccessModel& model,
                          Objective objective, const SweepSpec& spec,
                          double value) {
  SweepPoint point;
  point.value = value;
  try {
    const WeightedNetwork bumped =
        spec.param == SweepSpec::Param::Link
            ? with_link(net, spec.i, spec.j, value)
            : net;
    const SuccessModel swept =
        spec.param == SweepSpec::Param::Beta ? model.with_beta(value) : model;
    const OptimalContract contract = optimize(bumped, swept, objective);
    point.ok = true;
    point.shares = contract.shares;
    point.payoffs = contract.equilibrium.agent_payoffs;
    point.performance = contract.equilibrium.performance;
    point.c = contract.c;
    point.s_star = contract.s_star;
    point.active_mask = contract.active_set.bitmask();
  } catch (const std::exception& e) {
    point.ok = false;
    point.error = e.what();
  }
  return point;
}

void append_number(std::string& row, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  row += buf;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const WeightedNetwork& net,
                                  const SuccessModel& model,
                                  Objective objective, const SweepSpec& spec,
                                  int threads) {
  if (spec.param == SweepSpec::Param::Link) {
    if (spec.i < 0 || spec.i >= net.size() || spec.j < 0 ||
        spec.j >= net.size() || spec.i == spec.j)
      throw InputError("sweep link endpoints out of range");
    if (spec.lo < 0.0) throw InputError("link weights must be nonnegative");
  } else if (!(spec.lo > 0.0)) {
    throw InputError("beta sweep values must be positive");
  }

  const std::vector<double> grid = parameter_grid(spec);
  std::vector<SweepPoint> points(grid.size());
  const int workers = std::clamp<int>(threads, 1, static_cast<int>(grid.size()));

  if (workers == 1) {
    for (std::size_t k = 0; k < grid.size(); ++k)
      points[k] = evaluate_point(net, model, objective, spec, grid[k]);
    return points;
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < grid.size(); k = next++)
      points[k] = evaluate_point(net, model, objective, spec, grid[k]);
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return points;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points,
                     int n_agents) {
  if (n_agents < 1) throw InputError("CSV writer needs the agent count");
  std::string header = "param";
  for (int i = 0; i < n_agents; ++i) header += ",sigma_" + std::to_string(i);
  for (int i = 0; i < n_agents; ++i) header += ",payoff_" + std::to_string(i);
  header += ",performance,c,s_star,active_mask\n";
  out << header;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const SweepPoint& p : points) {
    std::string row;
    append_number(row, p.value);
    auto push = [&](double v) {
      row += ',';
      append_number(row, v);
    };
    if (p.ok) {
      for (int i = 0; i < n_agents; ++i) push(p.shares(i));
      for (int i = 0; i < n_agents; ++i) push(p.payoffs(i));
      push(p.performance);
      push(p.c);
      push(p.s_star);
      char buf[24];
      std::snprintf(buf, sizeof buf, ",%" PRIu64,
                    static_cast<std::uint64_t>(p.active_mask));
      row += buf;
    } else {
      for (int i = 0; i < 2 * n_agents + 3; ++i) push(nan);
      row += ",nan";
    }
    row += '\n';
    out << row;
  }
}

}  // namespace equitynet
