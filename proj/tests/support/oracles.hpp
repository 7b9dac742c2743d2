#pragma once

// Test-only reference implementations, written independently of the library
// algorithms: plain enumeration, long double arithmetic, no shortcuts.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "regionloc/facility.hpp"
#include "regionloc/region.hpp"
#include "regionloc/rep_point.hpp"

namespace oracle {

using regionloc::Cell;
using regionloc::Point;

inline long double objective_ld(const std::vector<Cell>& cells, Cell at, bool squared) {
  long double total = 0.0L;
  for (const Cell& c : cells) {
    const long double dx = static_cast<long double>(at.col) - c.col;
    const long double dy = static_cast<long double>(at.row) - c.row;
    total += squared ? dx * dx + dy * dy : std::sqrt(dx * dx + dy * dy);
  }
  return total;
}

// Minimizing cell center, ties (relative 1e-12) to smallest (x, y).
inline Point rep_point(std::vector<Cell> cells, bool squared) {
  std::sort(cells.begin(), cells.end());
  long double best = 0.0L;
  bool have = false;
  for (const Cell& c : cells) {
    const long double v = objective_ld(cells, c, squared);
    if (!have || v < best) best = v, have = true;
  }
  for (const Cell& c : cells) {
    if (objective_ld(cells, c, squared) <= best * (1.0L + 1e-12L)) return {c.col + 0.5, c.row + 0.5};
  }
  return {};
}

// Every lattice point inside the hull of the cells is itself a cell; checked
// by half-plane tests against all cell pairs spanning a supporting line.
inline bool digitally_convex(const std::vector<Cell>& cells) {
  const std::set<Cell> have(cells.begin(), cells.end());
  std::int32_t x0 = INT32_MAX, x1 = INT32_MIN, y0 = INT32_MAX, y1 = INT32_MIN;
  for (const Cell& c : have) {
    x0 = std::min(x0, c.col), x1 = std::max(x1, c.col);
    y0 = std::min(y0, c.row), y1 = std::max(y1, c.row);
  }
  const std::vector<Cell> pts(have.begin(), have.end());
  auto side = [](Cell a, Cell b, Cell p) {
    return static_cast<std::int64_t>(b.col - a.col) * (p.row - a.row) -
           static_cast<std::int64_t>(b.row - a.row) * (p.col - a.col);
  };
  // Supporting lines: pairs (a, b) with every point on one closed side.
  std::vector<std::pair<Cell, Cell>> lines;
  for (const Cell& a : pts) {
    for (const Cell& b : pts) {
      if (a == b) continue;
      bool ok = true;
      for (const Cell& p : pts) {
        if (side(a, b, p) < 0) { ok = false; break; }
      }
      if (ok) lines.emplace_back(a, b);
    }
  }
  for (std::int32_t x = x0; x <= x1; ++x) {
    for (std::int32_t y = y0; y <= y1; ++y) {
      const Cell q{x, y};
      if (have.count(q)) continue;
      bool inside = true;
      for (const auto& [a, b] : lines) {
        if (side(a, b, q) < 0) { inside = false; break; }
      }
      if (pts.size() <= 2) {
        // Degenerate hull: a point or a segment.
        inside = pts.size() == 2 && side(pts[0], pts[1], q) == 0 &&
                 std::min(pts[0].col, pts[1].col) <= x && x <= std::max(pts[0].col, pts[1].col) &&
                 std::min(pts[0].row, pts[1].row) <= y && y <= std::max(pts[0].row, pts[1].row);
      }
      if (inside) return false;
    }
  }
  return true;
}

// Closest-assignment feasibility for a fixed open set by enumerating every
// choice among each site's nearest open facilities.
inline bool assignment_exists(const regionloc::FacilityInstance& inst, const std::vector<std::size_t>& open) {
  const std::size_t n = inst.size();
  const double eps = inst.tie_epsilon();
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t x = 0; x < n; ++x) {
    double best = INFINITY;
    for (std::size_t y : open) best = std::min(best, inst.distance(x, y));
    for (std::size_t y : open) {
      if (inst.distance(x, y) <= best + eps) options[x].push_back(y);
    }
  }
  std::vector<double> load(n, 0.0);
  const double cap = inst.params().capacity;
  std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y : options[x]) {
      load[y] += static_cast<double>(inst.demand()[x]);
      if (load[y] <= cap && place(x + 1)) return true;
      load[y] -= static_cast<double>(inst.demand()[x]);
    }
    return false;
  };
  return place(0);
}

// Smallest k with a feasible open set of size k, and the lexicographically
// first such set, by enumerating subsets size by size.
struct LayeredResult {
  std::size_t k = 0;
  std::vector<std::size_t> open;
};

inline std::optional<LayeredResult> layered_optimum(const regionloc::FacilityInstance& inst) {
  const std::size_t n = inst.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (assignment_exists(inst, idx)) return LayeredResult{k, idx};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Random region shapes for property suites; cells lie in [0, w) x [0, h).
inline std::vector<Cell> random_blob(std::mt19937_64& rng, int w, int h) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> cx(0, w - 1), cy(0, h - 1);
  std::vector<Cell> cells;
  switch (kind(rng)) {
    case 0: {  // random scatter
      std::bernoulli_distribution keep(0.35);
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y)
          if (keep(rng)) cells.push_back({x, y});
      break;
    }
    case 1: {  // rectangle
      int a = cx(rng), b = cx(rng), c = cy(rng), d = cy(rng);
      for (int x = std::min(a, b); x <= std::max(a, b); ++x)
        for (int y = std::min(c, d); y <= std::max(c, d); ++y) cells.push_back({x, y});
      break;
    }
    case 2: {  // L / C / ring: rectangle minus a rectangle
      int a = cx(rng), b = cx(rng), c = cy(rng), d = cy(rng);
      int e = cx(rng), f = cx(rng), g = cy(rng), k = cy(rng);
      for (int x = std::min(a, b); x <= std::max(a, b); ++x)
        for (int y = std::min(c, d); y <= std::max(c, d); ++y) {
          const bool cut = x >= std::min(e, f) && x <= std::max(e, f) && y >= std::min(g, k) && y <= std::max(g, k);
          if (!cut) cells.push_back({x, y});
        }
      break;
    }
    default: {  // disc
      const double r = 1.0 + std::uniform_real_distribution<double>(0.0, std::min(w, h) / 2.0)(rng);
      const double ox = cx(rng) + 0.5, oy = cy(rng) + 0.5;
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y)
          if (std::hypot(x + 0.5 - ox, y + 0.5 - oy) <= r) cells.push_back({x, y});
      break;
    }
  }
  if (cells.empty()) cells.push_back({cx(rng), cy(rng)});
  return cells;
}

}  // namespace oracle
