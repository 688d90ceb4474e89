#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "equitynet/analytic_oracles.hpp"
#include "equitynet/extensive.hpp"
#include "equitynet/network.hpp"
#include "equitynet/random_instances.hpp"

using namespace equitynet;

namespace {

WeightedNetwork complete_graph(int n) {
  Matrix w = Matrix::Ones(n, n);
  w.diagonal().setZero();
  return WeightedNetwork(std::move(w));
}

WeightedNetwork path_graph(int n) {
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) w(i, i + 1) = w(i + 1, i) = 1.0;
  return WeightedNetwork(std::move(w));
}

WeightedNetwork triangle(double g13, double g23) {
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = w(1, 0) = 1.0;
  w(0, 2) = w(2, 0) = g13;
  w(1, 2) = w(2, 1) = g23;
  return WeightedNetwork(std::move(w));
}

}  // namespace

TEST_CASE("complete graphs keep everyone active") {
  SearchReport rep = search_active_set(complete_graph(5));
  CHECK(rep.best.set == AgentSet::all(5));
  CHECK(rep.best.c_per_unit == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(rep.ties.empty());
  CHECK(rep.method == SearchMethod::Enumeration);
  CHECK(rep.best.solution.shares(0) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("weighted triangle prefers full support when links are strong") {
  SearchReport strong = search_active_set(triangle(0.8, 0.6));
  CHECK(strong.best.set == AgentSet::all(3));
  CHECK(strong.best.c_per_unit == doctest::Approx(6.0 / 11).epsilon(1e-12));
  CHECK(strong.ties.empty());

  SearchReport weak = search_active_set(triangle(0.55, 0.3));
  CHECK(weak.best.set == AgentSet(std::vector<int>{0, 1}));
  CHECK(weak.best.c_per_unit == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("star optima tie across every centre-and-leaves support") {
  WeightedNetwork star = benchmark_network(BenchmarkFamily::Star, 5);
  SearchReport rep = search_active_set(star);
  CHECK(rep.best.set == AgentSet(std::vector<int>{0, 1}));
  CHECK(rep.best.c_per_unit == doctest::Approx(0.5).epsilon(1e-12));
  // Every support formed by the centre plus a nonempty leaf subset reaches
  // the same constant; there are 2^4 - 1 of them.
  CHECK(rep.ties.size() == 14);
  for (const auto& tie : rep.ties) {
    CHECK(tie.set.contains(0));
    CHECK(std::abs(tie.c_per_unit - 0.5) <= 1e-9);
  }
}

TEST_CASE("ten-agent circulant ties every antipodal-covering support") {
  WeightedNetwork circ = benchmark_network(BenchmarkFamily::CirculantPairs, 10);
  SearchReport rep = search_active_set(circ);
  CHECK(rep.best.set == AgentSet(std::vector<int>{0, 1, 2, 3, 4}));
  CHECK(rep.best.c_per_unit == doctest::Approx(0.8).epsilon(1e-12));

  std::set<std::uint64_t> tie_masks;
  tie_masks.insert(rep.best.set.bitmask());
  for (const auto& tie : rep.ties) tie_masks.insert(tie.set.bitmask());
  // One choice of {low, high, both} per antipodal class, all classes covered.
  CHECK(tie_masks.size() == 243);
  CHECK(tie_masks.count((std::uint64_t{1} << 10) - 1) == 1);  // full support
  for (int code = 0; code < 32; ++code) {  // the 32 five-agent transversals
    std::uint64_t mask = 0;
    for (int p = 0; p < 5; ++p)
      mask |= std::uint64_t{1} << ((code >> p & 1) ? p + 5 : p);
    CHECK(tie_masks.count(mask) == 1);
  }
}

TEST_CASE("diameter pruning skips wide sets without changing the best") {
  WeightedNetwork p4 = path_graph(4);
  SearchReport pruned = search_active_set(p4);
  CHECK(pruned.best.set == AgentSet(std::vector<int>{0, 1}));
  CHECK(pruned.best.c_per_unit == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pruned.pruned_by_diameter == 6);
  CHECK(pruned.evaluated == 5);
  CHECK(pruned.ties.size() == 4);

  SearchOptions no_prune;
  no_prune.prune_diameter = false;
  SearchReport full = search_active_set(p4, no_prune);
  CHECK(full.pruned_by_diameter == 0);
  CHECK(full.best.set == pruned.best.set);
  CHECK(full.best.c_per_unit ==
        doctest::Approx(pruned.best.c_per_unit).epsilon(1e-12));
  CHECK(full.ties.size() == pruned.ties.size());
}

TEST_CASE("search agrees with the unpruned brute-force oracle") {
  for (std::uint64_t id = 0; id < 30; ++id) {
    auto eng = gen::engine_for(21, 300 + id);
    const int n = gen::uniform_int(eng, 2, 6);
    WeightedNetwork net = gen::random_weighted(eng, n, 0.5);
    SearchReport fast = search_active_set(net);
    SearchReport slow = brute_force_oracle(net);
    CAPTURE(id);
    CHECK(fast.best.set == slow.best.set);
    CHECK(std::abs(fast.best.c_per_unit - slow.best.c_per_unit) <= 1e-12);
  }
}

TEST_CASE("the unweighted fast path solves cliques in closed form") {
  SearchReport rep = search_active_set_unweighted(complete_graph(20));
  CHECK(rep.method == SearchMethod::Clique);
  CHECK(rep.best.set == AgentSet::all(20));
  CHECK(rep.best.c_per_unit == doctest::Approx(19.0 / 20).epsilon(1e-12));
  CHECK(rep.best.solution.shares(7) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(rep.best.solution.k_star == doctest::Approx(20.0 / 19).epsilon(1e-12));

  // Agrees with enumeration where both apply.
  WeightedNetwork star = benchmark_network(BenchmarkFamily::Star, 5);
  SearchReport clique = search_active_set_unweighted(star);
  CHECK(clique.best.set == AgentSet(std::vector<int>{0, 1}));
  CHECK(clique.best.c_per_unit == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(search_active_set_unweighted(triangle(0.8, 0.6)),
                  NotUnweightedError);
}

TEST_CASE("size limits are enforced") {
  auto eng = gen::engine_for(21, 999);
  WeightedNetwork big = gen::random_weighted(eng, 17, 0.5);
  CHECK_THROWS_AS(search_active_set(big), TooLargeForEnumerationError);

  WeightedNetwork mid = gen::random_weighted(eng, 13, 0.5);
  CHECK_THROWS_AS(brute_force_oracle(mid), TooLargeForEnumerationError);
  CHECK_NOTHROW(search_active_set(mid, SearchOptions{16, true}));
}
