#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regionloc/facility.hpp"
#include "regionloc/io.hpp"
#include "regionloc/region.hpp"

namespace regionloc {

/// Optional layers drawn over the region fills. Empty members are skipped.
struct RenderOverlay {
  std::vector<CenterRow> centers;       ///< geo (ring) and alg (cross) glyphs
  std::vector<Point> sites;             ///< one per region, anchors labels and arrows
  std::optional<FacilitySolution> solution;
  std::vector<std::int64_t> demands;    ///< labels at the sites
};

/// SVG document of the map. Map y grows upward, so rows are flipped. Cell
/// size in pixels defaults to fitting the longer side in about 800 px.
/// Throws Error when an overlay does not match the map's regions.
std::string render_svg(const RegionMap& map, const RenderOverlay& overlay, double cell_px = 0.0);

}  // namespace regionloc
