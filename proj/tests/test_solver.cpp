#include <catch_amalgamated.hpp>

#include <random>

#include "regionloc/error.hpp"
#include "regionloc/solver.hpp"
#include "support/oracles.hpp"
#include "support/sample29.hpp"

using namespace regionloc;

namespace {

FacilityInstance line3(std::vector<std::int64_t> demand) {
  return build_instance_from_sites({{0, 0}, {10, 0}, {20, 0}}, std::move(demand), {200, 50, 10000});
}

// Small lattice instances produce many exact distance ties.
FacilityInstance random_instance(std::mt19937_64& rng, std::size_t n, bool lattice) {
  std::uniform_int_distribution<int> grid(0, 6);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  std::uniform_int_distribution<std::int64_t> dem(1, 10);
  std::uniform_int_distribution<int> cap(10, 40);
  std::vector<Point> sites;
  std::vector<std::int64_t> demand;
  for (std::size_t i = 0; i < n; ++i) {
    sites.push_back(lattice ? Point{double(grid(rng)), double(grid(rng))} : Point{coord(rng), coord(rng)});
    demand.push_back(dem(rng));
  }
  return build_instance_from_sites(sites, demand, {200, double(cap(rng)), 10000});
}

FacilityInstance sample29(bool algorithm_centers) {
  std::vector<Point> sites;
  std::vector<std::int64_t> demand;
  for (const auto& row : testdata::kSample29) {
    sites.push_back(algorithm_centers ? row.alg : row.geo);
    demand.push_back(row.demand);
  }
  return build_instance_from_sites(sites, demand, {200, 50, 10000});
}

}  // namespace

TEST_CASE("one facility serves everything when capacity allows") {
  const SolveReport r = solve(line3({3, 4, 5}));
  CHECK(r.solution.status == SolveStatus::Optimal);
  CHECK(r.solution.open_sites() == std::vector<std::size_t>{0});
  CHECK(r.solution.total_cost == 200.0);
  for (std::size_t x = 0; x < 3; ++x) CHECK(r.solution.assign.at(x, 0));
}

TEST_CASE("a tied middle site is split to respect capacity") {
  // {0,1} overloads facility 1; {0,2} works only with site 1 sent to 0.
  const FacilityInstance inst = line3({20, 30, 25});
  const SolveReport r = solve(inst);
  CHECK(r.solution.open_sites() == std::vector<std::size_t>{0, 2});
  CHECK(r.solution.total_cost == 400.0);
  CHECK(r.solution.assign.at(1, 0));
  CHECK(check_solution(inst, r.solution).empty());
}

TEST_CASE("assign_feasible on fixed open sets") {
  const FacilityInstance inst = line3({20, 30, 25});
  const std::size_t a[] = {0, 1};
  CHECK_FALSE(assign_feasible(inst, a).has_value());
  const std::size_t b[] = {0, 2};
  const auto sol = assign_feasible(inst, b);
  REQUIRE(sol.has_value());
  CHECK(check_solution(inst, *sol).empty());
  const std::size_t c[] = {1};
  CHECK_FALSE(assign_feasible(inst, c).has_value());
}

TEST_CASE("assign_feasible matches exhaustive assignment enumeration") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + rng() % 7;
    const FacilityInstance inst = random_instance(rng, n, i % 2 == 0);
    std::vector<std::size_t> open;
    for (std::size_t y = 0; y < n; ++y)
      if (rng() % 3 == 0) open.push_back(y);
    if (open.empty()) open.push_back(rng() % n);
    const auto sol = assign_feasible(inst, open);
    INFO("case " << i);
    CHECK(sol.has_value() == oracle::assignment_exists(inst, open));
    if (sol) {
      CHECK(check_solution(inst, *sol).empty());
      CHECK(sol->open_sites() == open);
    }
  }
}

TEST_CASE("solve agrees with exhaustive search and the layered oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    const FacilityInstance inst = random_instance(rng, 2 + rng() % 9, i % 3 == 0);
    const SolveReport fast = solve(inst);
    const SolveReport slow = exhaustive_solve(inst);
    const auto layered = oracle::layered_optimum(inst);
    INFO("case " << i);
    REQUIRE(layered.has_value());
    CHECK(fast.solution.status == SolveStatus::Optimal);
    CHECK(fast.solution.total_cost == slow.solution.total_cost);
    CHECK(fast.solution.open_sites() == slow.solution.open_sites());
    CHECK(fast.solution.open_sites() == layered->open);
    CHECK(check_solution(inst, fast.solution).empty());
  }
}

TEST_CASE("oversized demand is infeasible for both solvers") {
  std::vector<Point> sites{{0, 0}, {5, 0}};
  const FacilityInstance inst(sites, {60, 1}, {200, 50, 10000}, DistanceMatrix({1, 2}, sites, 2.0, std::nullopt));
  const SolveReport r = solve(inst);
  CHECK(r.solution.status == SolveStatus::Infeasible);
  CHECK(r.solution.open_count() == 0);
  CHECK(exhaustive_solve(inst).solution.status == SolveStatus::Infeasible);
  CHECK(check_solution(inst, r.solution).empty());
}

TEST_CASE("raising capacity never increases the open count") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    std::vector<Point> sites;
    std::vector<std::int64_t> demand;
    for (int k = 0; k < 10; ++k) {
      sites.push_back({double(rng() % 50), double(rng() % 50)});
      demand.push_back(1 + static_cast<std::int64_t>(rng() % 10));
    }
    std::size_t prev = sites.size() + 1;
    for (double cap : {10.0, 15.0, 20.0, 30.0, 50.0, 100.0}) {
      const auto r = solve(build_instance_from_sites(sites, demand, {200, cap, 10000}));
      REQUIRE(r.solution.status == SolveStatus::Optimal);
      CHECK(r.solution.open_count() <= prev);
      prev = r.solution.open_count();
    }
    CHECK(prev == 1);
  }
}

TEST_CASE("solve is deterministic and reports search effort") {
  const FacilityInstance inst = sample29(false);
  const SolveReport a = solve(inst);
  const SolveReport b = solve(inst);
  CHECK(a.solution == b.solution);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.subproblems_checked > 0);
}

TEST_CASE("exhaustive search refuses large instances") {
  const FacilityInstance inst = sample29(false);
  CHECK_THROWS_WITH(exhaustive_solve(inst), "oracle cap exceeded");
}

TEST_CASE("29-region sample instance optimum") {
  for (bool alg : {false, true}) {
    INFO((alg ? "algorithm centers" : "geometric centers"));
    const FacilityInstance inst = sample29(alg);
    const SolveReport r = solve(inst);
    const auto layered = oracle::layered_optimum(inst);
    REQUIRE(layered.has_value());
    CHECK(r.solution.status == SolveStatus::Optimal);
    CHECK(r.solution.open_count() >= 4);
    CHECK(r.solution.open_count() == layered->k);
    CHECK(r.solution.open_sites() == layered->open);
    CHECK(r.solution.open_count() == 5);
    CHECK(r.solution.total_cost == 1000.0);
    CHECK(check_solution(inst, r.solution).empty());
  }
}
