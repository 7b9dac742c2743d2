#include "regionloc/map_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

// std::uniform_int_distribution is implementation-defined; these keep maps
// identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

constexpr std::array<std::array<int, 2>, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

class Grid {
 public:
  Grid(int width, int height) : width_(width), height_(height), labels_(static_cast<std::size_t>(width) * height, 0) {}

  bool inside(Cell c) const { return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_; }
  int label(Cell c) const { return labels_[index(c)]; }
  void set(Cell c, int id) { labels_[index(c)] = id; }
  bool free(Cell c) const { return inside(c) && label(c) == 0; }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.row) * width_ + c.col; }
  int width_;
  int height_;
  std::vector<int> labels_;
};

struct Grower {
  int id = 0;
  std::vector<Cell> cells;
  std::vector<Cell> hull;
  std::vector<Cell> frontier;
  std::vector<Cell> deferred;
  bool accepted_since_recycle = false;
  bool done = false;
};

void push_neighbors(const Grid& grid, Grower& g, Cell c) {
  for (const auto& s : kSteps) {
    const Cell n{c.col + s[0], c.row + s[1]};
    if (grid.free(n)) g.frontier.push_back(n);
  }
}

// Adds one cell if the region stays digitally convex. Returns false when
// the region cannot grow any further.
bool grow_once(Grid& grid, Grower& g, std::mt19937_64& rng) {
  while (true) {
    if (g.frontier.empty()) {
      if (!g.accepted_since_recycle || g.deferred.empty()) return false;
      g.frontier.swap(g.deferred);
      g.accepted_since_recycle = false;
    }
    const std::size_t pick = uniform_below(rng, g.frontier.size());
    const Cell c = g.frontier[pick];
    g.frontier[pick] = g.frontier.back();
    g.frontier.pop_back();
    if (!grid.free(c)) continue;

    std::vector<Cell> candidate = g.hull;
    candidate.push_back(c);
    candidate = convex_hull(std::move(candidate));
    if (hull_lattice_count(candidate) != static_cast<std::int64_t>(g.cells.size()) + 1) {
      g.deferred.push_back(c);
      continue;
    }
    grid.set(c, g.id);
    g.cells.push_back(c);
    g.hull = std::move(candidate);
    g.accepted_since_recycle = true;
    push_neighbors(grid, g, c);
    return true;
  }
}

std::vector<Cell> place_seeds(Grid& grid, int count, std::mt19937_64& rng) {
  std::vector<Cell> seeds;
  const double spacing = std::sqrt(static_cast<double>(grid.width()) * grid.height() / count);
  double min_gap = std::max(2.0, 0.6 * spacing);
  int attempts = 0;
  while (static_cast<int>(seeds.size()) < count) {
    if (attempts > 4000) {
      if (min_gap <= 2.0) throw Error("placement failed");
      min_gap = std::max(2.0, min_gap * 0.75);
      attempts = 0;
    }
    ++attempts;
    const Cell c{static_cast<std::int32_t>(uniform_below(rng, grid.width())),
                 static_cast<std::int32_t>(uniform_below(rng, grid.height()))};
    bool ok = grid.free(c);
    for (const Cell& s : seeds) {
      if (!ok) break;
      ok = std::hypot(double(c.col - s.col), double(c.row - s.row)) >= min_gap;
    }
    if (!ok) continue;
    seeds.push_back(c);
    grid.set(c, static_cast<int>(seeds.size()));
  }
  return seeds;
}

Point mean_center(const std::vector<Cell>& cells) {
  double x = 0.0;
  double y = 0.0;
  for (const Cell& c : cells) {
    x += c.col + 0.5;
    y += c.row + 0.5;
  }
  return {x / static_cast<double>(cells.size()), y / static_cast<double>(cells.size())};
}

bool on_boundary(const Grid& grid, const Cell& c, int id) {
  for (const auto& s : kSteps) {
    const Cell n{c.col + s[0], c.row + s[1]};
    if (!grid.inside(n) || grid.label(n) != id) return true;
  }
  return false;
}

// Cells to remove for one carving attempt.
std::vector<Cell> carve_plan(const Grid& grid, const Grower& g, std::mt19937_64& rng) {
  const Point center = mean_center(g.cells);
  const double radius = std::sqrt(static_cast<double>(g.cells.size()) / std::numbers::pi);
  std::vector<Cell> removed;
  switch (uniform_below(rng, 3)) {
    case 0: {  // hole around the centroid
      const double r = (0.25 + 0.2 * uniform_unit(rng)) * radius;
      for (const Cell& c : g.cells) {
        if (std::hypot(c.col + 0.5 - center.x, c.row + 0.5 - center.y) <= r) removed.push_back(c);
      }
      break;
    }
    case 1: {  // wedge from the centroid outward
      const double dir = 2.0 * std::numbers::pi * uniform_unit(rng);
      const double half = (0.2 + 0.3 * uniform_unit(rng)) * std::numbers::pi / 2.0;
      for (const Cell& c : g.cells) {
        const double dx = c.col + 0.5 - center.x;
        const double dy = c.row + 0.5 - center.y;
        double diff = std::abs(std::remainder(std::atan2(dy, dx) - dir, 2.0 * std::numbers::pi));
        if (diff <= half) removed.push_back(c);
      }
      break;
    }
    default: {  // notch: slot from a boundary cell toward the centroid
      std::vector<Cell> boundary;
      for (const Cell& c : g.cells) {
        if (on_boundary(grid, c, g.id)) boundary.push_back(c);
      }
      if (boundary.empty()) break;
      const Cell start = boundary[uniform_below(rng, boundary.size())];
      const Point from = cell_center(start);
      const double len = std::hypot(center.x - from.x, center.y - from.y);
      if (len < 1e-9) break;
      const double ux = (center.x - from.x) / len;
      const double uy = (center.y - from.y) / len;
      const double depth = (0.6 + 0.5 * uniform_unit(rng)) * len;
      const double half_width = 0.5 + uniform_below(rng, 2);
      for (const Cell& c : g.cells) {
        const double dx = c.col + 0.5 - from.x;
        const double dy = c.row + 0.5 - from.y;
        const double along = dx * ux + dy * uy;
        const double across = std::abs(-dx * uy + dy * ux);
        if (along >= -0.5 && along <= depth && across <= half_width) removed.push_back(c);
      }
      break;
    }
  }
  return removed;
}

void carve(Grid& grid, Grower& g, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Cell> removed = carve_plan(grid, g, rng);
    std::sort(removed.begin(), removed.end());
    if (removed.empty() || removed.size() >= g.cells.size()) continue;
    std::vector<Cell> kept;
    for (const Cell& c : g.cells) {
      if (!std::binary_search(removed.begin(), removed.end(), c)) kept.push_back(c);
    }
    if (is_digitally_convex(RasterRegion(g.id, kept))) continue;
    for (const Cell& c : removed) grid.set(c, 0);
    g.cells = std::move(kept);
    return;
  }
  throw Error("placement failed: region " + std::to_string(g.id) + " could not be made non-convex");
}

std::vector<Cell> rect(int x0, int x1, int y0, int y1) {
  std::vector<Cell> out;
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) out.push_back({x, y});
  }
  return out;
}

std::vector<Cell> minus(std::vector<Cell> a, std::vector<Cell> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Cell> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Cell> join(std::vector<Cell> a, const std::vector<Cell>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Quarter turn counterclockwise about the lattice corner (pivot, pivot).
Cell quarter_turn(Cell c, int pivot) { return {2 * pivot - 1 - c.row, c.col}; }

}  // namespace

void validate(const GenConfig& config) {
  if (config.width < 8 || config.height < 8) throw Error("map must be at least 8x8");
  if (config.region_count < 1) throw Error("region count must be at least 1");
  if (!(config.concavity_bias >= 0.0 && config.concavity_bias <= 1.0)) throw Error("concavity bias must lie in [0, 1]");
  if (config.demand_min < 1 || config.demand_max < config.demand_min) throw Error("demand range must satisfy 1 <= min <= max");
}

GeneratedMap generate(const GenConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  Grid grid(config.width, config.height);

  const auto seeds = place_seeds(grid, config.region_count, rng);
  std::vector<Grower> growers(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    growers[i].id = static_cast<int>(i + 1);
    growers[i].cells = {seeds[i]};
    growers[i].hull = {seeds[i]};
    push_neighbors(grid, growers[i], seeds[i]);
  }

  const std::size_t target = std::max<std::size_t>(
      4, static_cast<std::size_t>(config.width) * config.height / static_cast<std::size_t>(config.region_count));
  bool active = true;
  while (active) {
    active = false;
    for (auto& g : growers) {
      if (g.done) continue;
      if (g.cells.size() >= target || !grow_once(grid, g, rng)) {
        g.done = true;
        continue;
      }
      active = true;
    }
  }

  std::vector<std::size_t> order(growers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  const auto concave = static_cast<std::size_t>(std::ceil(config.concavity_bias * config.region_count - 1e-9));
  for (std::size_t k = 0; k < concave; ++k) carve(grid, growers[order[k]], rng);

  std::vector<RasterRegion> regions;
  regions.reserve(growers.size());
  for (auto& g : growers) regions.emplace_back(g.id, std::move(g.cells));

  GeneratedMap out{RegionMap(config.width, config.height, std::move(regions)), {}};
  const auto span = static_cast<std::uint64_t>(config.demand_max - config.demand_min + 1);
  for (std::size_t i = 0; i < growers.size(); ++i) {
    out.demands.push_back(config.demand_min + static_cast<std::int64_t>(uniform_below(rng, span)));
  }
  return out;
}

RegionMap fixture(int case_id) {
  switch (case_id) {
    case 1: {
      // Ring 11x11 of thickness 3 around a 5x5 hole; a 3x3 block sits in the
      // middle of the hole. Both centroids are (7.5, 7.5).
      auto ring = minus(rect(2, 12, 2, 12), rect(5, 9, 5, 9));
      return RegionMap(15, 15, {RasterRegion(1, ring), RasterRegion(2, rect(6, 8, 6, 8))});
    }
    case 2: {
      // Region 2 is a U opening toward region 1: heavy arms pull its centroid
      // left, while its nearest in-region cell is on the bar next to region 3.
      auto hook = join(join(rect(4, 29, 0, 3), rect(4, 29, 36, 39)), rect(30, 31, 0, 39));
      return RegionMap(46, 40, {RasterRegion(1, rect(0, 2, 18, 21)), RasterRegion(2, hook),
                                RasterRegion(3, rect(42, 44, 18, 21))});
    }
    case 3: {
      // Four-arm pinwheel about the corner (8, 8); opposite arms form one
      // region, so each region is symmetric under a half turn about the pivot.
      constexpr int pivot = 8;
      auto arm = join(rect(8, 14, 8, 8), rect(14, 14, 9, 13));
      std::vector<Cell> a = arm, b, c, d;
      for (const Cell& cell : a) b.push_back(quarter_turn(cell, pivot));
      for (const Cell& cell : b) c.push_back(quarter_turn(cell, pivot));
      for (const Cell& cell : c) d.push_back(quarter_turn(cell, pivot));
      return RegionMap(16, 16, {RasterRegion(1, join(a, c)), RasterRegion(2, join(b, d))});
    }
    default:
      throw Error("unknown fixture case " + std::to_string(case_id));
  }
}

}  // namespace regionloc
