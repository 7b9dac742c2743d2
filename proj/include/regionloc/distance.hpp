#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regionloc/region.hpp"
#include "regionloc/rep_point.hpp"

namespace regionloc {

/// (|dx|^p + |dy|^p)^(1/p). p may be +infinity (max norm). Throws
/// Error("invalid norm exponent") for p < 1 or NaN.
double lp_distance(const Point& q, const Point& r, double p);

/// Euclidean distance between the representative points of two regions.
double region_distance(const RasterRegion& a, const RasterRegion& b, ObjectiveMode mode);

/// Dense symmetric n x n matrix of non-negative distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Builds the matrix from points with the l_p distance.
  DistanceMatrix(std::vector<int> ids, std::span<const Point> points, double p,
                 std::optional<ObjectiveMode> mode);

  std::size_t size() const { return ids_.size(); }
  const std::vector<int>& ids() const { return ids_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * ids_.size() + j]; }
  double max_entry() const;

  /// Representative-point mode used to place the sites; empty when the sites
  /// were geometric centers or given directly.
  std::optional<ObjectiveMode> mode() const { return mode_; }
  double exponent() const { return p_; }

  /// Copy with rows and columns reordered: result(i, j) = at(perm[i], perm[j]).
  DistanceMatrix permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<int> ids_;
  std::vector<double> entries_;
  std::optional<ObjectiveMode> mode_;
  double p_ = 2.0;
};

/// Representative point of every region, in map order.
std::vector<Point> representative_points(const RegionMap& map, ObjectiveMode mode);

/// Centroid of every region, in map order.
std::vector<Point> centroids(const RegionMap& map);

/// Region-to-region distances through representative points (p = 2).
DistanceMatrix distance_matrix(const RegionMap& map, ObjectiveMode mode);

/// Region-to-region distances through centroids (p = 2).
DistanceMatrix centroid_distance_matrix(const RegionMap& map);

}  // namespace regionloc
