#pragma once

#include <cstdint>
#include <vector>

#include "regionloc/region.hpp"

namespace regionloc {

struct GenConfig {
  int width = 200;
  int height = 200;
  int region_count = 29;
  /// Fraction of regions carved to be non-convex.
  double concavity_bias = 0.5;
  std::int64_t demand_min = 1;
  std::int64_t demand_max = 10;
  std::uint64_t seed = 1;
};

/// Throws Error describing the first invalid field.
void validate(const GenConfig& config);

struct GeneratedMap {
  RegionMap map;
  std::vector<std::int64_t> demands;  ///< one per region, in id order
};

/// Seeded random map. Regions grow cell by cell from separated seed cells,
/// accepting only cells that keep the region digitally convex; then
/// ceil(concavity_bias * region_count) of them are carved (notch, hole or
/// wedge) until they are non-convex. Deterministic for a fixed config.
/// Throws Error("placement failed") when seeds or carvings cannot be placed.
GeneratedMap generate(const GenConfig& config);

/// Built-in special-case maps:
///  1. ring whose centroid falls in a block placed inside it;
///  2. convex block, U-shaped hook and convex block where the hook's centroid
///     is nearer the first block but its in-region point is nearer the third;
///  3. two interlocking pinwheel regions sharing their centroid.
/// Throws Error for any other case id.
RegionMap fixture(int case_id);

}  // namespace regionloc
