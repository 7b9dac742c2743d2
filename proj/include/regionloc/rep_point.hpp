#pragma once

#include <string_view>

#include "regionloc/region.hpp"

namespace regionloc {

/// Integrand used when summing distances from a candidate to every cell.
enum class ObjectiveMode {
  Euclidean,  ///< sum of distances (the constrained 1-median)
  Squared,    ///< sum of squared distances (minimized by the centroid)
};

std::string_view to_string(ObjectiveMode mode);

/// Accepts "euclidean" or "squared"; throws Error otherwise.
ObjectiveMode parse_objective_mode(std::string_view text);

struct RepPointResult {
  Point point;  ///< center of an in-region cell
  double objective_value = 0.0;
  ObjectiveMode mode = ObjectiveMode::Squared;
  bool used_centroid_shortcut = false;
};

/// Riemann sum over the region's cells (unit cell area) of the distance, or
/// squared distance, from p to each cell center.
double objective(const RasterRegion& region, const Point& p, ObjectiveMode mode);

/// True when `value` counts as tied with the minimum `best`. Squared sums are
/// exact integers, so they tie only on equality; euclidean sums use a
/// relative tolerance of 1e-12.
bool ties_with_minimum(double value, double best, ObjectiveMode mode);

/// In-region cell center minimizing objective(); ties go to the smallest x,
/// then smallest y. Throws Error("empty region") for an empty region.
RepPointResult representative_point(const RasterRegion& region, ObjectiveMode mode);

/// Reference implementation: evaluates every cell center. Same result as
/// representative_point(), without the centroid shortcut or pruning.
RepPointResult brute_force_representative_point(const RasterRegion& region, ObjectiveMode mode);

}  // namespace regionloc
