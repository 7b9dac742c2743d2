#include "regionloc/rep_point.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

constexpr double kEuclideanTieTolerance = 1e-12;
// Lower bounds and objective sums round differently; never prune on a margin
// thinner than this.
constexpr double kBoundSlack = 1e-9;

__extension__ typedef __int128 Int128;

struct CellSums {
  std::int64_t n = 0;
  std::int64_t sx = 0;
  std::int64_t sy = 0;
};

CellSums sums_of(const RasterRegion& region) {
  CellSums s;
  s.n = static_cast<std::int64_t>(region.size());
  for (const Cell& c : region.cells()) {
    s.sx += c.col;
    s.sy += c.row;
  }
  return s;
}

// n^2 * |center(c) - centroid|^2, exact.
Int128 scaled_centroid_gap(const CellSums& s, Cell c) {
  const Int128 dx = static_cast<Int128>(s.n) * c.col - s.sx;
  const Int128 dy = static_cast<Int128>(s.n) * c.row - s.sy;
  return dx * dx + dy * dy;
}

// Candidate columns (or rows) whose closed unit interval holds the centroid
// coordinate (2 * sum + n) / (2n).
std::vector<std::int32_t> closed_cover(std::int64_t sum, std::int64_t n) {
  const std::int64_t num = 2 * sum + n;
  const std::int64_t den = 2 * n;
  std::int64_t fl = num / den;
  if (num % den != 0 && num < 0) --fl;
  if (num % den == 0) return {static_cast<std::int32_t>(fl - 1), static_cast<std::int32_t>(fl)};
  return {static_cast<std::int32_t>(fl)};
}

RepPointResult squared_minimizer(const RasterRegion& region) {
  const CellSums s = sums_of(region);
  RepPointResult result;
  result.mode = ObjectiveMode::Squared;

  // Sum of squared distances = n |p - g|^2 + const, so the minimizer is the
  // in-region cell center nearest to the centroid g.
  const Cell home = centroid_cell(region);
  bool found = false;
  Cell best{};
  if (region.has_cell(home)) {
    // The nearest lattice centers to g are those of the cells whose closed
    // squares contain g, and one of them is in the region.
    Int128 best_gap = 0;
    for (std::int32_t col : closed_cover(s.sx, s.n)) {
      for (std::int32_t row : closed_cover(s.sy, s.n)) {
        const Cell c{col, row};
        if (!region.has_cell(c)) continue;
        const Int128 gap = scaled_centroid_gap(s, c);
        if (!found || gap < best_gap) {
          best = c;
          best_gap = gap;
          found = true;
        }
      }
    }
    result.used_centroid_shortcut = true;
  } else {
    Int128 best_gap = 0;
    for (const Cell& c : region.cells()) {
      const Int128 gap = scaled_centroid_gap(s, c);
      if (!found || gap < best_gap) {
        best = c;
        best_gap = gap;
        found = true;
      }
    }
  }
  result.point = cell_center(best);
  result.objective_value = objective(region, result.point, ObjectiveMode::Squared);
  return result;
}

// Sum of |t - v| over sorted values, via prefix sums.
class AbsoluteSum {
 public:
  explicit AbsoluteSum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    prefix_.resize(values_.size() + 1, 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) prefix_[i + 1] = prefix_[i] + values_[i];
  }

  double operator()(double t) const {
    const auto k = static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), t) - values_.begin());
    const double below = t * static_cast<double>(k) - prefix_[k];
    const double above = (prefix_.back() - prefix_[k]) - t * static_cast<double>(values_.size() - k);
    return below + above;
  }

 private:
  std::vector<double> values_;
  std::vector<double> prefix_;
};

RepPointResult euclidean_minimizer(const RasterRegion& region) {
  const auto cells = region.cells();
  const std::size_t n = cells.size();

  // |q - c| >= |(q - c) . u| for any unit u, so each projected 1-D absolute
  // sum is a lower bound on the objective.
  std::vector<double> px(n), py(n), pd(n), pa(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point c = cell_center(cells[i]);
    px[i] = c.x;
    py[i] = c.y;
    pd[i] = c.x + c.y;
    pa[i] = c.x - c.y;
  }
  const AbsoluteSum sum_x(px), sum_y(py), sum_d(pd), sum_a(pa);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<double> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point q = cell_center(cells[i]);
    bound[i] = std::max({sum_x(q.x), sum_y(q.y), sum_d(q.x + q.y) * inv_sqrt2,
                         sum_a(q.x - q.y) * inv_sqrt2});
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bound[a] < bound[b]; });

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::size_t, double>> evaluated;
  for (std::size_t idx : order) {
    const double threshold = best + best * kEuclideanTieTolerance;
    if (bound[idx] * (1.0 - kBoundSlack) > threshold) break;
    const double value = objective(region, cell_center(cells[idx]), ObjectiveMode::Euclidean);
    evaluated.emplace_back(idx, value);
    best = std::min(best, value);
  }

  // Smallest cell index among the tied minimizers; cells are sorted by
  // (col, row) so the index order is the tie-break order.
  std::size_t chosen = n;
  double chosen_value = 0.0;
  for (const auto& [idx, value] : evaluated) {
    if (ties_with_minimum(value, best, ObjectiveMode::Euclidean) && idx < chosen) {
      chosen = idx;
      chosen_value = value;
    }
  }
  RepPointResult result;
  result.mode = ObjectiveMode::Euclidean;
  result.point = cell_center(cells[chosen]);
  result.objective_value = chosen_value;
  return result;
}

}  // namespace

std::string_view to_string(ObjectiveMode mode) {
  return mode == ObjectiveMode::Euclidean ? "euclidean" : "squared";
}

ObjectiveMode parse_objective_mode(std::string_view text) {
  if (text == "euclidean") return ObjectiveMode::Euclidean;
  if (text == "squared") return ObjectiveMode::Squared;
  throw Error("unknown objective mode '" + std::string(text) + "'");
}

double objective(const RasterRegion& region, const Point& p, ObjectiveMode mode) {
  double total = 0.0;
  if (mode == ObjectiveMode::Squared) {
    for (const Cell& c : region.cells()) {
      const double dx = p.x - (c.col + 0.5);
      const double dy = p.y - (c.row + 0.5);
      total += dx * dx + dy * dy;
    }
  } else {
    for (const Cell& c : region.cells()) {
      const double dx = p.x - (c.col + 0.5);
      const double dy = p.y - (c.row + 0.5);
      total += std::sqrt(dx * dx + dy * dy);
    }
  }
  return total;
}

bool ties_with_minimum(double value, double best, ObjectiveMode mode) {
  if (mode == ObjectiveMode::Squared) return value == best;
  return value <= best + best * kEuclideanTieTolerance;
}

RepPointResult representative_point(const RasterRegion& region, ObjectiveMode mode) {
  if (region.empty()) throw Error("empty region");
  return mode == ObjectiveMode::Squared ? squared_minimizer(region) : euclidean_minimizer(region);
}

RepPointResult brute_force_representative_point(const RasterRegion& region, ObjectiveMode mode) {
  if (region.empty()) throw Error("empty region");
  const auto cells = region.cells();
  std::vector<double> values(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) values[i] = objective(region, cell_center(cells[i]), mode);
  const double best = *std::min_element(values.begin(), values.end());

  RepPointResult result;
  result.mode = mode;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (ties_with_minimum(values[i], best, mode)) {
      result.point = cell_center(cells[i]);
      result.objective_value = values[i];
      break;
    }
  }
  return result;
}

}  // namespace regionloc
