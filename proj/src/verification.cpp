#include "equitynet/verification.hpp"

#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>

#include "equitynet/analytic_oracles.hpp"
#include "equitynet/compstat.hpp"
#include "equitynet/extensive.hpp"
#include "equitynet/intensive.hpp"
#include "equitynet/numeric.hpp"
#include "equitynet/random_instances.hpp"
#include "equitynet/sweep.hpp"

namespace equitynet::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

WeightedNetwork pair_net() {
  Matrix g(2, 2);
  g << 0, 1, 1, 0;
  return WeightedNetwork(g);
}

WeightedNetwork triangle_net(double g13, double g23) {
  Matrix g = Matrix::Zero(3, 3);
  g(0, 1) = g(1, 0) = 1.0;
  g(0, 2) = g(2, 0) = g13;
  g(1, 2) = g(2, 1) = g23;
  return WeightedNetwork(g);
}

// Relative spread of a list of values that should all coincide.
double relative_spread(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double lo = values.front(), hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / std::max(1.0, std::abs(hi));
}

bool has_rise(const std::vector<double>& xs) {
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    if (xs[k + 1] > xs[k] + 1e-12) return true;
  return false;
}

bool has_fall(const std::vector<double>& xs) {
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    if (xs[k + 1] < xs[k] - 1e-12) return true;
  return false;
}

bool strictly_decreasing(const std::vector<double>& xs) {
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    if (!(xs[k + 1] < xs[k] - 1e-12)) return false;
  return true;
}

// Location of the single sign change (+ to -) of d(sigma_0/sigma_1)/dg23
// for the triangle family, from the optimization pipeline itself.
double locate_ratio_sign_change(double g13, double lo, double hi,
                                const SuccessModel& model) {
  auto ratio_at = [&](double g) {
    const OptimalContract contract =
        optimize(triangle_net(g13, g), model, Objective::SuccessProbability);
    return contract.shares(0) / contract.shares(1);
  };
  auto slope = [&](double g) { return central_difference(ratio_at, g, 1e-6); };
  if (!(slope(lo) > 0.0) || !(slope(hi) < 0.0))
    throw SolverError("share-ratio slope does not bracket a sign change");
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double d_performance_implicit(const WeightedNetwork& net,
                              const SuccessModel& model,
                              const EquityAllocation& alloc,
                              const EquilibriumResult& result, int i, int j) {
  const int n = net.size();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw InputError("link endpoints out of range");
  const Vector& a = result.actions;
  const Vector& sigma = alloc.shares();
  const double y = result.performance;
  const double dp = model.deriv(y);
  const double d2p = model.second_deriv(y);
  const double beta = model.beta();

  const Vector w = Vector::Ones(n) + beta * (net.weights() * a);
  Matrix system = Matrix::Identity(n, n);
  system.noalias() -=
      beta * dp * sigma.asDiagonal() * net.weights();
  Eigen::PartialPivLU<Matrix> lu(system);

  Vector rhs_u = Vector::Zero(n);
  rhs_u(i) = beta * dp * sigma(i) * a(j);
  rhs_u(j) += beta * dp * sigma(j) * a(i);
  const Vector u = lu.solve(rhs_u);
  const Vector v = lu.solve((d2p * sigma.cwiseProduct(w)).eval());

  const double denom = 1.0 - w.dot(v);
  if (denom <= 0.0)
    throw SolverError("implicit performance derivative is not well posed");
  return (w.dot(u) + beta * a(i) * a(j)) / denom;
}

CheckResult equilibrium_foc_and_nash(std::uint64_t seed) {
  const auto t0 = Clock::now();
  double worst_foc = 0.0, worst_gain = 0.0;
  for (int id = 0; id < 200; ++id) {
    auto eng = gen::engine_for(seed, 1000 + static_cast<std::uint64_t>(id));
    const int n = gen::uniform_int(eng, 2, 8);
    const WeightedNetwork net = gen::random_weighted(eng, n, 0.5);
    const SuccessModel model = gen::random_model(eng, id % 2 == 0);
    const double scale = gen::uniform(eng, 0.3, 1.0);
    Vector shares = scale * gen::random_simplex(eng, n);
    if (gen::uniform01(eng) < 0.3) shares(gen::uniform_int(eng, 0, n - 1)) = 0.0;
    const EquityAllocation alloc(shares);
    const EquilibriumResult result = solve_equilibrium(net, model, alloc);
    worst_foc = std::max(worst_foc, result.foc_residual);
    worst_gain = std::max(worst_gain,
                          verify_nash(net, model, alloc, result, 1000));
  }
  const double elapsed = seconds_since(t0);
  const bool ok = worst_foc <= 1e-10 && worst_gain <= 1e-6 && elapsed < 10.0;
  return {"equilibrium-foc-and-deviations", ok,
          "200 cases: max foc residual " + num(worst_foc) +
              ", max deviation gain " + num(worst_gain) + ", " + num(elapsed) +
              "s"};
}

CheckResult balance_conditions(std::uint64_t seed) {
  double worst_equity = 0.0, worst_action = 0.0, worst_mu = 0.0, worst_b = 0.0;
  for (int id = 0; id < 100; ++id) {
    auto eng = gen::engine_for(seed, 2000 + static_cast<std::uint64_t>(id));
    const int n = gen::uniform_int(eng, 2, 7);
    const WeightedNetwork net = gen::random_weighted(eng, n, 0.6);
    const SuccessModel model = gen::random_model(eng, id % 2 == 0);
    const Objective objective = id % 4 < 2 ? Objective::SuccessProbability
                                           : Objective::ResidualProfit;
    const OptimalContract contract = optimize(net, model, objective);
    worst_equity = std::max(worst_equity, contract.balance.equity_spread);
    worst_action = std::max(worst_action, contract.balance.action_spread);

    std::vector<double> ratios;
    for (int i : contract.active_set.members())
      ratios.push_back(contract.equilibrium.actions(i) / contract.shares(i));
    worst_mu = std::max(worst_mu, relative_spread(ratios));

    const EquityAllocation alloc(contract.shares);
    const BonacichDiagnostics diag =
        bonacich_diagnostics(net, model, alloc, contract.equilibrium);
    std::vector<double> b_and_mu = ratios;
    for (int i : contract.active_set.members()) b_and_mu.push_back(diag.b(i));
    worst_b = std::max(worst_b, relative_spread(b_and_mu));
  }
  const bool ok = worst_equity <= 1e-9 && worst_action <= 1e-9 &&
                  worst_mu <= 1e-9 && worst_b <= 1e-8;
  return {"optimal-contract-balance", ok,
          "100 contracts: equity spread " + num(worst_equity) +
              ", action spread " + num(worst_action) + ", action/share spread " +
              num(worst_mu) + ", centrality spread " + num(worst_b)};
}

CheckResult oracle_equivalence(std::uint64_t seed) {
  double worst_gap = 0.0;
  int worst_diameter = 0;
  for (int id = 0; id < 500; ++id) {
    auto eng = gen::engine_for(seed, 3000 + static_cast<std::uint64_t>(id));
    const int n = gen::uniform_int(eng, 2, 6);
    const WeightedNetwork net = gen::random_weighted(eng, n, 0.5);
    const SearchReport pruned = search_active_set(net);
    const SearchReport oracle = brute_force_oracle(net);
    const double gap =
        std::abs(pruned.best.c_per_unit - oracle.best.c_per_unit) /
        std::max(1.0, oracle.best.c_per_unit);
    worst_gap = std::max(worst_gap, gap);
    for (const AgentSet& winner : {pruned.best.set, oracle.best.set}) {
      const auto d = diameter(net, winner);
      worst_diameter = std::max(worst_diameter, d ? *d : 999);
    }
  }
  const bool ok = worst_gap <= 1e-9 && worst_diameter <= 2;
  return {"search-vs-brute-force", ok,
          "500 networks: max best-c gap " + num(worst_gap) +
              ", max winner diameter " + std::to_string(worst_diameter)};
}

CheckResult clique_optimality(std::uint64_t seed) {
  const double probs[3] = {0.3, 0.5, 0.7};
  double worst_gap = 0.0;
  for (int id = 0; id < 200; ++id) {
    auto eng = gen::engine_for(seed, 4000 + static_cast<std::uint64_t>(id));
    const int n = gen::uniform_int(eng, 4, 12);
    const WeightedNetwork net = gen::random_unweighted(eng, n, probs[id % 3]);
    const double kbar = static_cast<double>(max_clique(net).size());
    const double expected = (kbar - 1.0) / kbar;
    const SearchReport report = search_active_set(net);
    worst_gap =
        std::max(worst_gap, std::abs(report.best.c_per_unit - expected));
  }

  // The ten-agent circulant with antipodal links removed ties the full set
  // with every transversal five-clique at c = 0.8.
  const WeightedNetwork circ = benchmark_network(BenchmarkFamily::CirculantPairs, 10);
  const SearchReport report = search_active_set(circ);
  const double circ_gap = std::abs(report.best.c_per_unit - 0.8);
  std::set<std::uint64_t> masks{report.best.set.bitmask()};
  for (const ActiveSetCandidate& tie : report.ties)
    masks.insert(tie.set.bitmask());
  bool ties_ok = masks.count((1ULL << 10) - 1) > 0;
  for (int code = 0; code < 32 && ties_ok; ++code) {
    std::uint64_t mask = 0;
    for (int p = 0; p < 5; ++p)
      mask |= 1ULL << (((code >> p) & 1) ? p + 5 : p);
    ties_ok = masks.count(mask) > 0;
  }
  const bool best_ok = report.best.set == AgentSet({0, 1, 2, 3, 4});

  const bool ok = worst_gap <= 1e-12 && circ_gap <= 1e-12 && ties_ok && best_ok;
  return {"unweighted-clique-optimality", ok,
          "200 graphs: max c gap " + num(worst_gap) + "; circulant gap " +
              num(circ_gap) + ", ties " + (ties_ok ? "complete" : "missing")};
}

CheckResult three_agent_closed_forms() {
  const SuccessModel model = SuccessModel::capped_linear(0.3, 0.95, 0.2);
  double worst_share = 0.0, worst_c = 0.0;
  int set_mismatches = 0, switch_mismatches = 0;
  for (int a = 0; a < 20; ++a) {
    const double g13 = 0.06 + a * (0.99 - 0.06) / 19.0;
    for (int b = 0; b < 20; ++b) {
      const double g23 = 0.06 + b * (0.99 - 0.06) / 19.0;
      if (g23 > g13) continue;
      const ThreeAgentContract oracle = three_agent_contract({g13, g23}, 1.0);
      const OptimalContract contract = optimize(
          triangle_net(g13, g23), model, Objective::SuccessProbability);
      if (!(contract.active_set == oracle.active_set)) ++set_mismatches;
      if ((contract.active_set.size() == 3) != (g13 + g23 > 1.0))
        ++switch_mismatches;
      worst_share = std::max(
          worst_share, (contract.shares - oracle.shares).cwiseAbs().maxCoeff());
      worst_c = std::max(worst_c, std::abs(contract.c - oracle.c));
    }
  }

  const double located = locate_ratio_sign_change(0.8, 0.25, 0.79, model);
  const double threshold_gap = std::abs(located - g_star(0.8));

  const bool ok = worst_share <= 1e-9 && worst_c <= 1e-9 &&
                  set_mismatches == 0 && switch_mismatches == 0 &&
                  threshold_gap <= 1e-4;
  return {"three-agent-closed-forms", ok,
          "grid: max share gap " + num(worst_share) + ", max c gap " +
              num(worst_c) + ", set mismatches " +
              std::to_string(set_mismatches) + "; ratio threshold gap " +
              num(threshold_gap)};
}

CheckResult rp_sweep_nonmonotonic() {
  const WeightedNetwork net = triangle_net(0.8, 0.5);
  const SuccessModel model = SuccessModel::capped_linear(0.9, 1.0 - 1e-12, 0.1);
  SweepSpec spec;
  spec.param = SweepSpec::Param::Link;
  spec.i = 1;
  spec.j = 2;
  spec.lo = 0.25;
  spec.hi = 0.79;
  spec.steps = 100;
  const std::vector<SweepPoint> points =
      run_sweep(net, model, Objective::ResidualProfit, spec, 1);

  int failures = 0;
  std::vector<double> sigma1, u0, u1;
  for (const SweepPoint& p : points) {
    if (!p.ok) {
      ++failures;
      continue;
    }
    sigma1.push_back(p.shares(1));
    u0.push_back(p.payoffs(0));
    u1.push_back(p.payoffs(1));
  }

  bool interior_min = false;
  if (!sigma1.empty()) {
    std::size_t argmin = 0;
    for (std::size_t k = 1; k < sigma1.size(); ++k)
      if (sigma1[k] < sigma1[argmin]) argmin = k;
    interior_min = argmin > 0 && argmin + 1 < sigma1.size() &&
                   sigma1[argmin] < sigma1.front() - 1e-12 &&
                   sigma1[argmin] < sigma1.back() - 1e-12;
  }

  // Strengthening the weak link lowers both strong agents' payoffs under the
  // re-optimized contract.  The first agent never recovers; the middle agent
  // passes through a strict interior dip before recovering.
  const bool u0_declines = has_fall(u0) && !has_rise(u0);
  const bool u1_dips = has_rise(u1) && has_fall(u1);

  // Contrast: with the share vector frozen at the left end of the grid,
  // every payoff is nondecreasing in the link weight, as in standard network
  // games.  The declines above are purely a re-optimization effect.
  bool frozen_monotone = !points.empty() && points.front().ok;
  if (frozen_monotone) {
    const EquityAllocation frozen(points.front().shares);
    Vector prev;
    for (const SweepPoint& p : points) {
      const Vector pay =
          solve_equilibrium(with_link(net, 1, 2, p.value), model, frozen)
              .agent_payoffs;
      if (prev.size() > 0 && (pay - prev).minCoeff() < -1e-12)
        frozen_monotone = false;
      prev = pay;
    }
  }

  const bool ok = failures == 0 && interior_min && u0_declines && u1_dips &&
                  frozen_monotone;
  return {"rp-sweep-shape", ok,
          std::string("weak-link sweep: ") + std::to_string(failures) +
              " failed points; middle share " +
              (interior_min ? "has" : "lacks") + " an interior minimum; " +
              "first payoff " + (u0_declines ? "declines" : "does not decline") +
              ", middle payoff " + (u1_dips ? "dips and recovers" : "lacks a dip") +
              "; frozen-share payoffs " +
              (frozen_monotone ? "monotone" : "not monotone")};
}

CheckResult link_derivatives(std::uint64_t seed) {
  // Share gradients against a finite difference of the re-optimized
  // pipeline, on networks whose optimum keeps every agent active.
  struct KeptCase {
    WeightedNetwork net;
    SuccessModel model;
    OptimalContract contract;
  };
  double worst_rel = 0.0;
  int accepted = 0;
  std::vector<KeptCase> kept;
  for (int attempt = 0; attempt < 400 && accepted < 50; ++attempt) {
    auto eng = gen::engine_for(seed, 7000 + static_cast<std::uint64_t>(attempt));
    const int n = 4 + attempt % 3;
    const WeightedNetwork net = gen::random_weighted(eng, n, 1.0, 0.7, 1.0);
    const SuccessModel model = gen::random_model(eng, attempt % 2 == 0);
    const OptimalContract contract =
        optimize(net, model, Objective::SuccessProbability);
    if (contract.active_set.size() != n) continue;

    const int j = gen::uniform_int(eng, 0, n - 1);
    int k = gen::uniform_int(eng, 0, n - 2);
    if (k >= j) ++k;
    Vector grad;
    try {
      grad = d_shares_d_weight(net, model, contract, {j, k});
    } catch (const ActiveSetUnstableError&) {
      continue;
    }
    const double h = 1e-5;
    const double w0 = net.weight(j, k);
    auto shares_at = [&](double w) {
      return optimize(with_link(net, j, k, w), model,
                      Objective::SuccessProbability)
          .shares;
    };
    const Vector fd = (shares_at(w0 + h) - shares_at(w0 - h)) / (2.0 * h);
    const double rel = (fd - grad).cwiseAbs().maxCoeff() /
                       std::max(1e-6, grad.cwiseAbs().maxCoeff());
    worst_rel = std::max(worst_rel, rel);
    ++accepted;
    if (accepted <= 20) kept.push_back({net, model, contract});
  }

  // Performance derivative: the implicit-function route must be
  // proportional to sigma_i sigma_j across active pairs, and the closed
  // form must agree with it.
  const SuccessModel tri_model = SuccessModel::capped_linear(0.3, 0.95, 0.2);
  kept.push_back({triangle_net(0.8, 0.6), tri_model,
                  optimize(triangle_net(0.8, 0.6), tri_model,
                           Objective::SuccessProbability)});
  double worst_spread = 0.0, worst_formula = 0.0;
  for (const KeptCase& kc : kept) {
    const EquityAllocation alloc(kc.contract.shares);
    const double spread = pairwise_ratio_spread(
        kc.contract.shares, kc.contract.active_set, [&](int i, int j) {
          return d_performance_implicit(kc.net, kc.model, alloc,
                                        kc.contract.equilibrium, i, j);
        });
    worst_spread = std::max(worst_spread, spread);
    const auto& members = kc.contract.active_set.members();
    for (std::size_t p = 0; p < members.size(); ++p)
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        const double implied =
            d_performance_implicit(kc.net, kc.model, alloc,
                                   kc.contract.equilibrium, members[p],
                                   members[q]);
        const double formula = d_performance_d_weight(
            kc.net, kc.model, kc.contract, members[p], members[q]);
        worst_formula =
            std::max(worst_formula, std::abs(formula - implied) /
                                        std::max(1e-12, std::abs(implied)));
      }
  }

  // The canonical triangle pins the pair-ratio value itself: the two
  // derivatives seen from agent 0 must stand in the ratio of the partners'
  // shares, 1.6 exactly.
  double frozen_ratio_gap;
  {
    const KeptCase& kc = kept.back();
    const EquityAllocation alloc(kc.contract.shares);
    const double d01 = d_performance_implicit(kc.net, kc.model, alloc,
                                              kc.contract.equilibrium, 0, 1);
    const double d02 = d_performance_implicit(kc.net, kc.model, alloc,
                                              kc.contract.equilibrium, 0, 2);
    frozen_ratio_gap = std::abs(d01 / d02 - 1.6);
  }

  // Total-share curve in the complementarity strength: strictly
  // increasing, and the cubic root agrees with the search path.
  std::vector<double> betas;
  for (int k = 0; k < 20; ++k) betas.push_back(0.1 + k * (1.9 - 0.1) / 19.0);
  const std::vector<double> curve = total_share_curve(pair_net(), 0.5, betas);
  bool increasing = true;
  for (std::size_t k = 0; k + 1 < curve.size(); ++k)
    if (!(curve[k + 1] > curve[k])) increasing = false;

  double worst_root_gap = 0.0;
  for (const WeightedNetwork& net : {pair_net(), triangle_net(0.8, 0.6)}) {
    const SuccessModel model = SuccessModel::capped_linear(0.5, 0.95, 0.5);
    const OptimalContract contract =
        optimize(net, model, Objective::ResidualProfit);
    const double closed = rp_linear_closed_form(contract.k_star, 0.5, 0.5);
    worst_root_gap = std::max(worst_root_gap,
                              std::abs(contract.s_star - closed));
  }
  const double frozen_gap =
      std::abs(rp_linear_closed_form(2.0, 0.5, 0.5) - 0.525303500794962);

  const bool ok = accepted == 50 && worst_rel <= 1e-4 &&
                  worst_spread <= 1e-8 && worst_formula <= 1e-6 &&
                  frozen_ratio_gap <= 1e-9 && increasing &&
                  worst_root_gap <= 1e-8 && frozen_gap <= 1e-9;
  return {"link-derivatives", ok,
          std::to_string(accepted) +
              " gradient cases: max fd gap " + num(worst_rel) +
              "; pair-ratio spread " + num(worst_spread) +
              ", closed-form gap " + num(worst_formula) +
              "; share curve " + (increasing ? "increasing" : "not increasing") +
              ", root gap " + num(worst_root_gap)};
}

CheckResult beta_invariance(std::uint64_t seed) {
  auto eng = gen::engine_for(seed, 8000);
  const std::vector<WeightedNetwork> nets = {
      pair_net(), triangle_net(0.8, 0.6), gen::random_weighted(eng, 5, 0.7)};
  const double betas[3] = {0.05, 0.2, 0.5};
  double worst_sp = 0.0, worst_rp = 0.0;
  for (const WeightedNetwork& net : nets) {
    for (bool linear : {true, false}) {
      std::vector<Vector> sp_shares, rp_ratios;
      for (double beta : betas) {
        const SuccessModel model =
            linear ? SuccessModel::capped_linear(0.4, 0.95, beta)
                   : SuccessModel::saturating(0.8, 1.0, beta);
        const OptimalContract sp =
            optimize(net, model, Objective::SuccessProbability);
        sp_shares.push_back(sp.shares);
        const OptimalContract rp =
            optimize(net, model, Objective::ResidualProfit);
        rp_ratios.push_back(rp.shares / rp.s_star);
      }
      for (std::size_t k = 1; k < sp_shares.size(); ++k) {
        worst_sp = std::max(
            worst_sp,
            (sp_shares[k] - sp_shares.front()).cwiseAbs().maxCoeff());
        worst_rp = std::max(
            worst_rp,
            (rp_ratios[k] - rp_ratios.front()).cwiseAbs().maxCoeff());
      }
    }
  }
  const bool ok = worst_sp <= 1e-12 && worst_rp <= 1e-9;
  return {"beta-invariance", ok,
          "max sp share drift " + num(worst_sp) + ", max rp ratio drift " +
              num(worst_rp)};
}

CheckResult spectral_certificates(std::uint64_t seed) {
  const auto t0 = Clock::now();
  const SuccessModel model = SuccessModel::capped_linear(0.3, 0.95, 0.2);
  std::vector<WeightedNetwork> nets = {benchmark_network(BenchmarkFamily::Clique, 3),
                                       triangle_net(0.8, 0.6)};
  for (int k = 0; k < 8; ++k) {
    auto eng = gen::engine_for(seed, 9000 + static_cast<std::uint64_t>(k));
    const int n = gen::uniform_int(eng, 3, 8);
    nets.push_back(k % 2 == 0 ? gen::random_weighted(eng, n, 0.6)
                              : gen::random_unweighted(eng, n, 0.5));
  }

  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < nets.size(); ++k) {
    const OptimalContract contract =
        optimize(nets[k], model, Objective::SuccessProbability);
    const SpectralCertificate cert = spectral_radius_certificate(
        nets[k], contract, 10000, seed + static_cast<std::uint64_t>(k));
    min_margin = std::min(min_margin, cert.margin);
  }

  const double k3_rho = spectral_radius_product(
      Vector::Constant(3, 1.0 / 3.0),
      benchmark_network(BenchmarkFamily::Clique, 3).weights());
  const double pair_rho =
      spectral_radius_product(Vector::Constant(2, 0.5), pair_net().weights());
  const double elapsed = seconds_since(t0);

  const bool ok = min_margin >= -1e-9 && std::abs(k3_rho - 2.0 / 3.0) <= 1e-10 &&
                  std::abs(pair_rho - 0.5) <= 1e-12 && elapsed < 30.0;
  return {"spectral-certificate", ok,
          std::to_string(nets.size()) + " contracts x 10000 trials: min margin " +
              num(min_margin) + ", " + num(elapsed) + "s"};
}

CheckResult model_regularity() {
  double worst = 0.0;
  bool guards_ok = true;

  const SuccessModel linear = SuccessModel::capped_linear(0.9, 1.0 - 1e-12, 0.1);
  for (int k = 0; k <= 50; ++k) {
    const double y = 1.09 * k / 50.0;
    if (!(linear.deriv(y) > 0.0) || !(linear.second_deriv(y) <= 0.0))
      guards_ok = false;
    if (y >= 1e-5 && y <= 1.08) {
      const double fd =
          central_difference([&](double t) { return linear.eval(t); }, y, 1e-6);
      worst = std::max(worst, std::abs(fd - linear.deriv(y)) /
                                  std::max(1.0, std::abs(linear.deriv(y))));
    }
  }
  double frozen = 0.0;
  frozen = std::max(frozen, std::abs(linear.eval(0.5) - 0.45));
  frozen = std::max(frozen, std::abs(linear.deriv(0.5) - 0.9));
  frozen = std::max(frozen, std::abs(linear.second_deriv(0.5)));

  const SuccessModel sat = SuccessModel::saturating(0.9, 1.0, 0.2);
  for (int k = 0; k <= 50; ++k) {
    const double y = 5.0 * k / 50.0;
    if (!(sat.deriv(y) > 0.0) || !(sat.second_deriv(y) < 0.0)) guards_ok = false;
    if (y >= 1e-5) {
      const double fd =
          central_difference([&](double t) { return sat.eval(t); }, y, 1e-6);
      worst = std::max(worst, std::abs(fd - sat.deriv(y)) /
                                  std::max(1.0, std::abs(sat.deriv(y))));
    }
  }
  frozen = std::max(frozen, std::abs(sat.eval(1.0) - 0.5689085029457019));
  frozen = std::max(frozen, std::abs(sat.deriv(1.0) - 0.33109149705429813));
  frozen = std::max(frozen, std::abs(sat.eval(0.0)));
  frozen = std::max(frozen, std::abs(linear.eval(0.0)));

  try {
    linear.eval(-0.1);
    guards_ok = false;
  } catch (const NegativePerformanceError&) {
  }
  try {
    sat.deriv(-1.0);
    guards_ok = false;
  } catch (const NegativePerformanceError&) {
  }
  try {
    linear.deriv(1.5);
    guards_ok = false;
  } catch (const KinkReachedError&) {
  }
  if (std::abs(linear.eval_total(1.5) - (1.0 - 1e-12)) > 1e-15)
    guards_ok = false;

  const bool ok = worst <= 1e-6 && frozen <= 1e-12 && guards_ok;
  return {"model-regularity", ok,
          "max derivative gap " + num(worst) + ", max frozen-value gap " +
              num(frozen) + ", guards " + (guards_ok ? "intact" : "broken")};
}

CheckResult uniqueness_and_monotonicity(std::uint64_t seed) {
  double worst_unique = 0.0, worst_mono = 0.0;
  for (int id = 0; id < 20; ++id) {
    auto eng = gen::engine_for(seed, 11000 + static_cast<std::uint64_t>(id));
    const int n = gen::uniform_int(eng, 2, 6);
    const WeightedNetwork net = gen::random_weighted(eng, n, 0.6);
    const SuccessModel model = gen::random_model(eng, id % 2 == 0);
    const double scale = gen::uniform(eng, 0.3, 0.9);
    const Vector shares = scale * gen::random_simplex(eng, n);
    const EquityAllocation alloc(shares);
    const double ref =
        solve_equilibrium(net, model, alloc).performance;
    for (int b = 0; b < 5; ++b) {
      const double upper = gen::uniform(eng, 0.1, 10.0);
      const double y =
          solve_equilibrium(net, model, alloc, upper).performance;
      worst_unique = std::max(worst_unique, std::abs(y - ref));
    }

    const double total = shares.sum();
    const double tau = gen::uniform(eng, 1.01, 1.0 / total);
    const double scaled =
        solve_equilibrium(net, model, EquityAllocation(tau * shares))
            .performance;
    worst_mono = std::max(worst_mono, ref - scaled);

    Vector bumped = shares;
    bumped(gen::uniform_int(eng, 0, n - 1)) += std::min(0.05, 1.0 - total);
    const double bumped_y =
        solve_equilibrium(net, model, EquityAllocation(bumped)).performance;
    worst_mono = std::max(worst_mono, ref - bumped_y);
  }
  const bool ok = worst_unique <= 1e-10 && worst_mono <= 1e-12;
  return {"uniqueness-and-monotonicity", ok,
          "100 restarts: max performance drift " + num(worst_unique) +
              "; max monotonicity violation " + num(worst_mono)};
}

CheckResult rp_grid_optimality(std::uint64_t seed) {
  (void)seed;
  double worst = -std::numeric_limits<double>::infinity();
  const std::vector<WeightedNetwork> nets = {pair_net(),
                                             triangle_net(0.8, 0.6)};
  for (const WeightedNetwork& net : nets) {
    for (bool linear : {true, false}) {
      const SuccessModel model =
          linear ? SuccessModel::capped_linear(0.5, 0.95, 0.5)
                 : SuccessModel::saturating(0.8, 1.0, 0.25);
      const OptimalContract contract =
          optimize(net, model, Objective::ResidualProfit);
      const Vector unit = contract.shares / contract.s_star;
      for (int k = 1; k <= 1000; ++k) {
        const double s = k / 1001.0;
        const EquilibriumResult eq =
            solve_equilibrium(net, model, EquityAllocation(s * unit));
        worst = std::max(worst, (1.0 - s) * eq.success_prob - contract.value);
      }
    }
  }
  const bool ok = worst <= 1e-8;
  return {"rp-grid-optimality", ok,
          "4000 grid points: max value excess over optimum " + num(worst)};
}

CheckResult weak_link_thresholds() {
  const SuccessModel model = SuccessModel::capped_linear(0.3, 0.95, 0.2);
  double worst_threshold = 0.0;
  const double g13s[4] = {0.6, 0.7, 0.8, 0.9};
  const double los[4] = {0.43, 0.33, 0.25, 0.13};
  const double his[4] = {0.57, 0.67, 0.79, 0.85};
  for (int k = 0; k < 4; ++k) {
    const double located =
        locate_ratio_sign_change(g13s[k], los[k], his[k], model);
    worst_threshold =
        std::max(worst_threshold, std::abs(located - g_star(g13s[k])));
  }

  const double gs = g_star(0.8);
  auto shares_at = [&](double g23) {
    return optimize(triangle_net(0.8, g23), model,
                    Objective::SuccessProbability)
        .shares;
  };
  std::vector<double> mid_share, strong_share;
  for (int k = 0; k < 50; ++k) {
    mid_share.push_back(
        shares_at(0.21 + k * (gs - 0.01 - 0.21) / 49.0)(1));
    strong_share.push_back(
        shares_at(gs + 0.01 + k * (0.79 - gs - 0.01) / 49.0)(0));
  }
  const bool windows_ok =
      strictly_decreasing(mid_share) && strictly_decreasing(strong_share);

  bool ratios_ok = true;
  for (int k = 0; k < 25 && ratios_ok; ++k) {
    const double g23 = 0.25 + k * (0.79 - 0.25) / 24.0;
    const double s21 = central_difference(
        [&](double g) {
          const Vector sh = shares_at(g);
          return sh(1) / sh(2);
        },
        g23, 1e-6);
    const double s20 = central_difference(
        [&](double g) {
          const Vector sh = shares_at(g);
          return sh(0) / sh(2);
        },
        g23, 1e-6);
    ratios_ok = s21 < 0.0 && s20 < 0.0;
  }

  const bool ok = worst_threshold <= 1e-4 && windows_ok && ratios_ok;
  return {"weak-link-thresholds", ok,
          "max threshold gap " + num(worst_threshold) + "; share windows " +
              (windows_ok ? "decreasing" : "not decreasing") +
              "; weak-agent ratios " +
              (ratios_ok ? "declining" : "not declining")};
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> results;
  auto guard = [&](const char* name, auto&& fn) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  guard("equilibrium-foc-and-deviations",
        [&] { return equilibrium_foc_and_nash(seed); });
  guard("optimal-contract-balance", [&] { return balance_conditions(seed); });
  guard("search-vs-brute-force", [&] { return oracle_equivalence(seed); });
  guard("unweighted-clique-optimality", [&] { return clique_optimality(seed); });
  guard("three-agent-closed-forms", [] { return three_agent_closed_forms(); });
  guard("rp-sweep-shape", [] { return rp_sweep_nonmonotonic(); });
  guard("link-derivatives", [&] { return link_derivatives(seed); });
  guard("beta-invariance", [&] { return beta_invariance(seed); });
  guard("spectral-certificate", [&] { return spectral_certificates(seed); });
  guard("model-regularity", [] { return model_regularity(); });
  guard("uniqueness-and-monotonicity",
        [&] { return uniqueness_and_monotonicity(seed); });
  guard("rp-grid-optimality", [&] { return rp_grid_optimality(seed); });
  guard("weak-link-thresholds", [] { return weak_link_thresholds(); });
  return results;
}

int run_and_report(std::ostream& out, std::uint64_t seed) {
  const std::vector<CheckResult> results = run_all(seed);
  int failures = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail
        << '\n';
    if (!r.passed) ++failures;
  }
  out << results.size() - static_cast<std::size_t>(failures) << '/'
      << results.size() << " checks passed\n";
  return failures;
}

}  // namespace equitynet::verify
