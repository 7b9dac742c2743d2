// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and budgets are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regionloc/distance.hpp"
#include "regionloc/facility.hpp"
#include "regionloc/io.hpp"
#include "regionloc/map_gen.hpp"
#include "regionloc/rep_point.hpp"
#include "regionloc/solver.hpp"
#include "support/oracles.hpp"
#include "support/sample29.hpp"

using namespace regionloc;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kRepPointBudgetSec = 60.0;
constexpr double kSolverBudgetSec = 120.0;
constexpr double kSampleBudgetSec = 60.0;
constexpr double kTriangleSlack = 1e-12;  // relative, for lp rounding
constexpr int kMetricTriples = 10000;

const ObjectiveMode kModes[] = {ObjectiveMode::Euclidean, ObjectiveMode::Squared};

int g_failed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Regions from generated maps across all three bias levels.
std::vector<RasterRegion> generated_regions(std::size_t at_least) {
  std::vector<RasterRegion> out;
  GenConfig cfg;
  cfg.width = 60;
  cfg.height = 60;
  cfg.region_count = 10;
  const double biases[] = {0.0, 0.5, 1.0};
  for (std::uint64_t seed = 1; out.size() < at_least; ++seed) {
    cfg.seed = seed;
    cfg.concavity_bias = biases[seed % 3];
    const GeneratedMap g = generate(cfg);
    for (const auto& r : g.map.regions()) out.push_back(r);
  }
  return out;
}

std::vector<RasterRegion> random_small_regions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RasterRegion> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int w = 1 + static_cast<int>(rng() % 20);
    const int h = 1 + static_cast<int>(rng() % 20);
    out.emplace_back(static_cast<int>(i + 1), oracle::random_blob(rng, w, h));
  }
  return out;
}

bool centroid_inside(const RasterRegion& r) { return r.has_cell(centroid_cell(r)); }

void criterion_1() {
  const auto t0 = Clock::now();
  const auto regions = generated_regions(500);
  std::size_t ok = 0, total = 0, concave = 0;
  for (const auto& r : regions) {
    concave += is_digitally_convex(r) ? 0 : 1;
    for (ObjectiveMode m : kModes) {
      ++total;
      ok += contains(r, representative_point(r, m).point) ? 1 : 0;
    }
  }
  const double secs = seconds_since(t0);
  report(1, "in-region guarantee", ok == total && regions.size() >= 500 && secs < kRepPointBudgetSec,
         std::to_string(ok) + "/" + std::to_string(total) + " in region over " + std::to_string(regions.size()) +
             " regions (" + std::to_string(concave) + " non-convex), " + fmt(secs) + " s");
}

void criterion_2() {
  std::vector<RasterRegion> pool = generated_regions(500);
  for (auto& r : random_small_regions(2000, 202)) pool.push_back(std::move(r));

  std::size_t checked = 0, exact = 0, off_boundary = 0, floor_match = 0;
  const double radius = std::sqrt(2.0) / 2.0;
  for (const auto& r : pool) {
    if (!centroid_inside(r)) continue;
    ++checked;
    const Point g = centroid(r);
    const Point p = representative_point(r, ObjectiveMode::Squared).point;
    // The centroid's cell center: among in-region cells whose closed square
    // holds g, the smallest by (x, y). Off cell boundaries this is simply the
    // cell under g.
    Point expected{};
    bool found = false;
    for (const Cell& c : r.cells()) {
      if (std::abs(c.col + 0.5 - g.x) <= 0.5 && std::abs(c.row + 0.5 - g.y) <= 0.5) {
        expected = cell_center(c);
        found = true;
        break;
      }
    }
    const bool near = std::hypot(p.x - g.x, p.y - g.y) <= radius;
    if (found && p == expected && near) ++exact;
    if (g.x != std::floor(g.x) && g.y != std::floor(g.y)) {
      ++off_boundary;
      floor_match += p == cell_center(cell_of(g)) ? 1 : 0;
    }
  }
  report(2, "centroid equivalence (squared)", checked >= 200 && exact == checked && floor_match == off_boundary,
         std::to_string(exact) + "/" + std::to_string(checked) + " regions with in-region centroid; " +
             std::to_string(floor_match) + "/" + std::to_string(off_boundary) + " off cell boundaries match the floor cell");
}

void criterion_3() {
  std::vector<RasterRegion> pool = random_small_regions(1000, 303);
  GenConfig cfg;
  cfg.width = 20;
  cfg.height = 20;
  cfg.region_count = 5;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    cfg.seed = seed;
    cfg.concavity_bias = (seed % 2) ? 1.0 : 0.0;
    const GeneratedMap g = generate(cfg);
    for (const auto& r : g.map.regions()) pool.push_back(r);
  }
  std::size_t agree = 0, total = 0;
  for (const auto& r : pool) {
    for (ObjectiveMode m : kModes) {
      const auto fast = representative_point(r, m);
      const auto slow = brute_force_representative_point(r, m);
      ++total;
      agree += (fast.point == slow.point && fast.objective_value == slow.objective_value) ? 1 : 0;
    }
  }
  report(3, "oracle agreement", pool.size() >= 1000 && agree == total,
         std::to_string(agree) + "/" + std::to_string(total) + " exact matches over " + std::to_string(pool.size()) +
             " regions up to 20x20");
}

void criterion_4() {
  // First witness in a deterministic scan of the random suite.
  const auto pool = random_small_regions(2000, 404);
  std::size_t witnesses = 0;
  std::string first;
  for (const auto& r : pool) {
    if (!centroid_inside(r)) continue;
    const Point sq = brute_force_representative_point(r, ObjectiveMode::Squared).point;
    const Point eu = brute_force_representative_point(r, ObjectiveMode::Euclidean).point;
    if (sq == eu) continue;
    if (representative_point(r, ObjectiveMode::Squared).point != sq ||
        representative_point(r, ObjectiveMode::Euclidean).point != eu)
      continue;
    if (witnesses++ == 0) {
      const Point g = centroid(r);
      first = "region #" + std::to_string(r.id()) + " (" + std::to_string(r.size()) + " cells, centroid " +
              format_number(g.x) + "," + format_number(g.y) + "): squared " + format_number(sq.x) + "," +
              format_number(sq.y) + " vs euclidean " + format_number(eu.x) + "," + format_number(eu.y);
    }
  }
  report(4, "mode-divergence witness", witnesses >= 1,
         std::to_string(witnesses) + " witnesses; first " + (first.empty() ? "none" : first));
}

void criterion_5() {
  const RegionMap m = fixture(1);
  const double geo = centroid_distance_matrix(m).at(0, 1);
  bool ok = geo == 0.0;
  std::string detail = "d_geo=" + format_number(geo);
  for (ObjectiveMode mode : kModes) {
    const double alg = distance_matrix(m, mode).at(0, 1);
    ok = ok && alg > 0.0;
    detail += ", d_alg(" + std::string(to_string(mode)) + ")=" + format_number(alg);
  }
  report(5, "fixture 1: centroid inside another region", ok, detail);
}

void criterion_6() {
  const RegionMap m = fixture(2);
  const DistanceMatrix geo = centroid_distance_matrix(m);
  bool ok = geo.at(0, 1) < geo.at(1, 2);
  std::string detail = "d_geo(1,2)=" + format_number(geo.at(0, 1)) + " d_geo(2,3)=" + format_number(geo.at(1, 2));
  for (ObjectiveMode mode : kModes) {
    const DistanceMatrix alg = distance_matrix(m, mode);
    ok = ok && alg.at(1, 2) < alg.at(0, 1);
    detail += "; " + std::string(to_string(mode)) + " d_alg(1,2)=" + format_number(alg.at(0, 1)) +
              " d_alg(2,3)=" + format_number(alg.at(1, 2));
  }
  report(6, "fixture 2: C-shaped region flips the nearer neighbour", ok, detail);
}

void criterion_7() {
  const RegionMap m = fixture(3);
  bool ok = true;
  std::string detail = "d_geo=" + format_number(centroid_distance_matrix(m).at(0, 1));
  for (ObjectiveMode mode : kModes) {
    const double alg = distance_matrix(m, mode).at(0, 1);
    ok = ok && alg == 0.0;
    detail += ", d_alg(" + std::string(to_string(mode)) + ")=" + format_number(alg);
  }
  if (!ok) detail += " (disjoint regions cannot share an in-region cell center; minimum possible is 1)";
  report(7, "fixture 3: algorithm centers coincide", ok, detail);
}

FacilityInstance random_instance(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  std::uniform_int_distribution<int> lattice(0, 8);
  std::uniform_int_distribution<std::int64_t> dem(1, 10);
  std::uniform_int_distribution<int> cap(10, 50);
  const bool ties = rng() % 3 == 0;
  std::vector<Point> sites;
  std::vector<std::int64_t> demand;
  for (std::size_t i = 0; i < n; ++i) {
    sites.push_back(ties ? Point{double(lattice(rng)), double(lattice(rng))} : Point{coord(rng), coord(rng)});
    demand.push_back(dem(rng));
  }
  return build_instance_from_sites(sites, demand, {200, double(cap(rng)), 10000});
}

void criterion_8() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(808);
  const int count = 240;
  int agree = 0, clean = 0, optimal = 0;
  for (int i = 0; i < count; ++i) {
    const FacilityInstance inst = random_instance(rng, 2 + rng() % 11);
    const SolveReport fast = solve(inst);
    const SolveReport slow = exhaustive_solve(inst);
    const bool same = fast.solution.status == slow.solution.status &&
                      fast.solution.total_cost == slow.solution.total_cost &&
                      fast.solution.open_sites() == slow.solution.open_sites();
    agree += same ? 1 : 0;
    if (fast.solution.status == SolveStatus::Optimal) {
      ++optimal;
      clean += check_solution(inst, fast.solution).empty() && check_solution(inst, slow.solution).empty() ? 1 : 0;
    }
  }
  const double secs = seconds_since(t0);
  report(8, "solver vs exhaustive search", agree == count && clean == optimal && secs < kSolverBudgetSec,
         std::to_string(agree) + "/" + std::to_string(count) + " agree (n <= 12), " + std::to_string(clean) + "/" +
             std::to_string(optimal) + " optimal solutions violation-free, " + fmt(secs) + " s");
}

void criterion_9() {
  const auto t0 = Clock::now();
  std::vector<Point> sites;
  std::vector<std::int64_t> demand;
  for (const auto& row : testdata::kSample29) {
    sites.push_back(row.geo);
    demand.push_back(row.demand);
  }
  const FacilityInstance inst = build_instance_from_sites(sites, demand, {200, 50, 10000});
  const SolveReport r = solve(inst);
  const auto layered = oracle::layered_optimum(inst);
  const double secs = seconds_since(t0);

  constexpr std::size_t kPinnedOpen = 5;
  const std::size_t k = r.solution.open_count();
  const bool ok = inst.total_demand() == 200 && inst.distances().max_entry() < 300.0 &&
                  r.solution.status == SolveStatus::Optimal && k >= 4 && r.solution.total_cost == 200.0 * k &&
                  layered && layered->k == k && layered->open == r.solution.open_sites() && k == kPinnedOpen &&
                  check_solution(inst, r.solution).empty() && secs < kSampleBudgetSec;
  std::string open;
  for (std::size_t y : r.solution.open_sites()) open += (open.empty() ? "" : ",") + std::to_string(y + 1);
  report(9, "29-region sample instance",
         ok, "total demand " + std::to_string(inst.total_demand()) + ", max distance " +
                 fmt(inst.distances().max_entry()) + ", k*=" + std::to_string(k) + " (oracle " +
                 (layered ? std::to_string(layered->k) : "none") + ", pinned " + std::to_string(kPinnedOpen) +
                 "), cost " + format_number(r.solution.total_cost) + ", open {" + open + "}, " + fmt(secs) + " s");
}

void criterion_10() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
  std::size_t failures = 0, checks = 0;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < kMetricTriples; ++i) {
      const Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
      const double ab = lp_distance(a, b, p), bc = lp_distance(b, c, p), ac = lp_distance(a, c, p);
      checks += 3;
      failures += ac <= (ab + bc) * (1.0 + kTriangleSlack) ? 0 : 1;
      failures += ab == lp_distance(b, a, p) ? 0 : 1;
      failures += lp_distance(a, a, p) == 0.0 && ab > 0.0 ? 0 : 1;
    }
  }
  const bool anchor = lp_distance({0, 0}, {3, 4}, 2.0) == 5.0;
  report(10, "lp metric properties", failures == 0 && anchor,
         std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks over " +
             std::to_string(4 * kMetricTriples) + " triples; d((0,0),(3,4),2)=" +
             format_number(lp_distance({0, 0}, {3, 4}, 2.0)));
}

std::string grid_text(const RegionMap& m) {
  std::ostringstream out;
  write_label_grid(out, m);
  return out.str();
}

void criterion_11() {
  const auto dir = std::filesystem::temp_directory_path() / "regionloc_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<RegionMap> maps;
  for (int c = 1; c <= 3; ++c) maps.push_back(fixture(c));
  GenConfig cfg;
  cfg.width = 80;
  cfg.height = 60;
  cfg.region_count = 12;
  std::size_t deterministic = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cfg.seed = seed;
    cfg.concavity_bias = (seed % 5) / 4.0;
    const GeneratedMap a = generate(cfg);
    const GeneratedMap b = generate(cfg);
    std::ostringstream da, db;
    write_demands(da, a.demands);
    write_demands(db, b.demands);
    const FacilityInstance ia = build_instance(a.map, ObjectiveMode::Squared, a.demands, {});
    const FacilityInstance ib = build_instance(b.map, ObjectiveMode::Squared, b.demands, {});
    const bool same = grid_text(a.map) == grid_text(b.map) && da.str() == db.str() &&
                      solution_to_json(solve(ia).solution) == solution_to_json(solve(ib).solution);
    deterministic += same ? 1 : 0;
    maps.push_back(a.map);
  }
  std::size_t round_trips = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto path = dir / ("map" + std::to_string(i) + ".csv");
    save_map(path, maps[i]);
    const RegionMap back = load_map(path);
    round_trips += (back == maps[i] && grid_text(back) == read_text(path)) ? 1 : 0;
  }
  std::filesystem::remove_all(dir);
  report(11, "determinism and round-trips", deterministic == 50 && round_trips == maps.size(),
         std::to_string(deterministic) + "/50 seeds reproduce map, demands and solution bytes; " +
             std::to_string(round_trips) + "/" + std::to_string(maps.size()) + " maps round-trip through files");
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                            criterion_5, criterion_6, criterion_7, criterion_8,
                                            criterion_9, criterion_10, criterion_11};
  for (const auto& run : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion raised: %s\n", e.what());
      ++g_failed;
    }
  }
  std::printf("%d of 11 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
