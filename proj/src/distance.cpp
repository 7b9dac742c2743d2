#include "regionloc/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regionloc/error.hpp"

namespace regionloc {

double lp_distance(const Point& q, const Point& r, double p) {
  if (std::isnan(p) || p < 1.0) throw Error("invalid norm exponent");
  const double dx = std::abs(q.x - r.x);
  const double dy = std::abs(q.y - r.y);
  if (p == 1.0) return dx + dy;
  if (p == 2.0) return std::sqrt(dx * dx + dy * dy);
  if (std::isinf(p)) return std::max(dx, dy);
  return std::pow(std::pow(dx, p) + std::pow(dy, p), 1.0 / p);
}

double region_distance(const RasterRegion& a, const RasterRegion& b, ObjectiveMode mode) {
  return lp_distance(representative_point(a, mode).point, representative_point(b, mode).point, 2.0);
}

DistanceMatrix::DistanceMatrix(std::vector<int> ids, std::span<const Point> points, double p,
                               std::optional<ObjectiveMode> mode)
    : ids_(std::move(ids)), mode_(mode), p_(p) {
  if (ids_.size() != points.size()) throw Error("distance matrix: id count does not match point count");
  for (const Point& q : points) {
    if (!is_finite(q)) throw Error("distance matrix: non-finite point");
  }
  const std::size_t n = ids_.size();
  entries_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = lp_distance(points[i], points[j], p);
      entries_[i * n + j] = d;
      entries_[j * n + i] = d;
    }
  }
}

double DistanceMatrix::max_entry() const {
  double m = 0.0;
  for (double d : entries_) m = std::max(m, d);
  return m;
}

DistanceMatrix DistanceMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw Error("permutation size does not match matrix");
  DistanceMatrix out = *this;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    out.ids_[i] = ids_[perm[i]];
    for (std::size_t j = 0; j < n; ++j) out.entries_[i * n + j] = at(perm[i], perm[j]);
  }
  return out;
}

std::vector<Point> representative_points(const RegionMap& map, ObjectiveMode mode) {
  std::vector<Point> out;
  out.reserve(map.region_count());
  for (const auto& r : map.regions()) out.push_back(representative_point(r, mode).point);
  return out;
}

std::vector<Point> centroids(const RegionMap& map) {
  std::vector<Point> out;
  out.reserve(map.region_count());
  for (const auto& r : map.regions()) {
    if (r.empty()) throw Error("empty region");
    out.push_back(centroid(r));
  }
  return out;
}

namespace {

std::vector<int> ids_of(const RegionMap& map) {
  std::vector<int> ids;
  for (const auto& r : map.regions()) ids.push_back(r.id());
  return ids;
}

}  // namespace

DistanceMatrix distance_matrix(const RegionMap& map, ObjectiveMode mode) {
  return DistanceMatrix(ids_of(map), representative_points(map, mode), 2.0, mode);
}

DistanceMatrix centroid_distance_matrix(const RegionMap& map) {
  return DistanceMatrix(ids_of(map), centroids(map), 2.0, std::nullopt);
}

}  // namespace regionloc
