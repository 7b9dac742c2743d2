#include "regionloc/region.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

// Floor division for a positive divisor.
std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

std::int64_t cross(Cell o, Cell a, Cell b) {
  return static_cast<std::int64_t>(a.col - o.col) * (b.row - o.row) -
         static_cast<std::int64_t>(a.row - o.row) * (b.col - o.col);
}

}  // namespace

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point cell_center(Cell c) { return {c.col + 0.5, c.row + 0.5}; }

Cell cell_of(const Point& p) {
  return {static_cast<std::int32_t>(std::floor(p.x)), static_cast<std::int32_t>(std::floor(p.y))};
}

RasterRegion::RasterRegion(int id, std::vector<Cell> cells) : id_(id), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
}

bool RasterRegion::has_cell(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

RasterRegion RasterRegion::translated(int dx, int dy) const {
  std::vector<Cell> moved;
  moved.reserve(cells_.size());
  for (const Cell& c : cells_) moved.push_back({c.col + dx, c.row + dy});
  return RasterRegion(id_, std::move(moved));
}

RegionMap::RegionMap(int width, int height, std::vector<RasterRegion> regions)
    : width_(width), height_(height), regions_(std::move(regions)) {}

const RasterRegion& RegionMap::region(int id) const {
  for (const auto& r : regions_) {
    if (r.id() == id) return r;
  }
  throw Error("unknown region id " + std::to_string(id));
}

std::vector<int> RegionMap::label_grid() const {
  std::vector<int> labels(static_cast<std::size_t>(width_) * height_, 0);
  for (const auto& r : regions_) {
    for (const Cell& c : r.cells()) {
      labels[static_cast<std::size_t>(c.row) * width_ + c.col] = r.id();
    }
  }
  return labels;
}

bool contains(const RasterRegion& region, const Point& p) {
  if (!is_finite(p)) return false;
  return region.has_cell(cell_of(p));
}

double area(const RasterRegion& region) { return static_cast<double>(region.size()); }

Point centroid(const RasterRegion& region) {
  const auto n = static_cast<std::int64_t>(region.size());
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (const Cell& c : region.cells()) {
    sx += c.col;
    sy += c.row;
  }
  // mean(col + 0.5) = (2 * sum + n) / (2n), one rounding step.
  const double den = 2.0 * static_cast<double>(n);
  return {static_cast<double>(2 * sx + n) / den, static_cast<double>(2 * sy + n) / den};
}

Cell centroid_cell(const RasterRegion& region) {
  const auto n = static_cast<std::int64_t>(region.size());
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (const Cell& c : region.cells()) {
    sx += c.col;
    sy += c.row;
  }
  return {static_cast<std::int32_t>(floor_div(2 * sx + n, 2 * n)),
          static_cast<std::int32_t>(floor_div(2 * sy + n, 2 * n))};
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidDimensions: return "invalid-dimensions";
    case ViolationKind::EmptyRegion: return "empty-region";
    case ViolationKind::DuplicateCell: return "duplicate-cell";
    case ViolationKind::OutOfBounds: return "out-of-bounds";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::DuplicateId: return "duplicate-id";
    case ViolationKind::NonContiguousIds: return "non-contiguous-ids";
  }
  return "unknown";
}

std::vector<Violation> validate(const RegionMap& map) {
  std::vector<Violation> out;
  if (map.width() <= 0 || map.height() <= 0) {
    out.push_back({ViolationKind::InvalidDimensions, {}, {}, "map dimensions must be positive"});
  }

  std::map<int, int> id_count;
  for (const auto& r : map.regions()) ++id_count[r.id()];
  for (const auto& [id, count] : id_count) {
    if (count > 1) {
      out.push_back({ViolationKind::DuplicateId, {id}, {}, "region id " + std::to_string(id) + " used " + std::to_string(count) + " times"});
    }
  }
  int expected = 1;
  for (const auto& [id, count] : id_count) {
    if (id != expected) {
      out.push_back({ViolationKind::NonContiguousIds, {id}, {}, "region ids must run 1..N; found " + std::to_string(id) + " where " + std::to_string(expected) + " was expected"});
      break;
    }
    ++expected;
  }

  std::map<Cell, int> owner;
  for (const auto& r : map.regions()) {
    if (r.empty()) {
      out.push_back({ViolationKind::EmptyRegion, {r.id()}, {}, "region " + std::to_string(r.id()) + " has no cells"});
      continue;
    }
    auto cells = r.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell c = cells[i];
      if (i > 0 && cells[i - 1] == c) {
        out.push_back({ViolationKind::DuplicateCell, {r.id()}, c, "region " + std::to_string(r.id()) + " lists a cell twice"});
        continue;
      }
      if (c.col < 0 || c.row < 0 || c.col >= map.width() || c.row >= map.height()) {
        out.push_back({ViolationKind::OutOfBounds, {r.id()}, c, "region " + std::to_string(r.id()) + " has a cell outside the map"});
      }
      auto [it, inserted] = owner.emplace(c, r.id());
      if (!inserted && it->second != r.id()) {
        out.push_back({ViolationKind::Overlap, {it->second, r.id()}, c, "regions " + std::to_string(it->second) + " and " + std::to_string(r.id()) + " share a cell"});
      }
    }
  }
  return out;
}

std::vector<Cell> convex_hull(std::vector<Cell> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  // Andrew's monotone chain.
  std::vector<Cell> hull(2 * points.size());
  std::size_t k = 0;
  for (const Cell& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Cell& p = points[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

std::int64_t hull_lattice_count(std::span<const Cell> hull) {
  if (hull.empty()) return 0;
  if (hull.size() == 1) return 1;
  // A = I + B/2 - 1  =>  I + B = A + B/2 + 1, with 2A from the shoelace sum.
  // Two vertices form a degenerate polygon traversed both ways: 2A = 0,
  // B = 2 gcd, which yields gcd + 1 points on the segment.
  std::int64_t twice_area = 0;
  std::int64_t boundary = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Cell a = hull[i];
    const Cell b = hull[(i + 1) % hull.size()];
    twice_area += static_cast<std::int64_t>(a.col) * b.row - static_cast<std::int64_t>(b.col) * a.row;
    boundary += std::gcd(static_cast<std::int64_t>(std::abs(b.col - a.col)), static_cast<std::int64_t>(std::abs(b.row - a.row)));
  }
  twice_area = std::abs(twice_area);
  return (twice_area + boundary) / 2 + 1;
}

bool is_digitally_convex(const RasterRegion& region) {
  std::vector<Cell> cells(region.cells().begin(), region.cells().end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const auto distinct = static_cast<std::int64_t>(cells.size());
  return hull_lattice_count(convex_hull(std::move(cells))) == distinct;
}

}  // namespace regionloc
