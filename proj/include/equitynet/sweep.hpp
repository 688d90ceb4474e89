#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "equitynet/common.hpp"
#include "equitynet/network.hpp"
#include "equitynet/objective.hpp"
#include "equitynet/success_model.hpp"

namespace equitynet {

struct SweepSpec {
  enum class Param { Link, Beta };
  Param param = Param::Beta;
  int i = 0, j = 0;  // link endpoints when param == Link
  double lo = 0.0;
  double hi = 0.0;
  int steps = 100;  // points across [lo, hi]; a zero-length range yields one
};

struct SweepPoint {
  double value = 0.0;
  bool ok = false;
  std::string error;       // failure message when !ok
  Vector shares;
  Vector payoffs;
  double performance = 0.0;
  double c = 0.0;
  double s_star = 0.0;
  std::uint64_t active_mask = 0;
};

// Re-optimizes the contract at each parameter value.  Points run on up to
// `threads` workers; the returned vector is in parameter order regardless.
// A failing point carries its error message and renders as a NaN row.
std::vector<SweepPoint> run_sweep(const WeightedNetwork& net,
                                  const SuccessModel& model,
                                  Objective objective, const SweepSpec& spec,
                                  int threads = 1);

// Deterministic CSV: header then one row per point, numbers at %.12g.
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points,
                     int n_agents);

}  // namespace equitynet
