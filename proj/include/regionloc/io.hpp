#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regionloc/distance.hpp"
#include "regionloc/facility.hpp"
#include "regionloc/region.hpp"
#include "regionloc/rep_point.hpp"
#include "regionloc/solver.hpp"

namespace regionloc {

/// Shortest decimal text that reads back to the same double; "-0" prints as "0".
std::string format_number(double value);

// Labeled grid CSV: height rows of width comma-separated labels, 0 for
// unclaimed cells. The first row is the top map row (y = height - 1).
// Parsing does not validate; load_map() does.
RegionMap read_label_grid(std::istream& in);
void write_label_grid(std::ostream& out, const RegionMap& map);

/// Cells whose centers fall inside the rings under the even-odd rule.
RasterRegion rasterize_polygon(int id, const std::vector<std::vector<Point>>& rings, int width, int height);

// Polygon map JSON:
//   {"width": W, "height": H, "regions": [{"id": 1, "rings": [[[x, y], ...], ...]}, ...]}
RegionMap read_polygon_map(std::istream& in);

/// Reads a map from a .json polygon file or a labeled grid CSV and checks it
/// with validate(); throws ParseError listing the violations.
RegionMap load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const RegionMap& map);

/// JSON array of integers.
std::vector<std::int64_t> read_demands(std::istream& in);
std::vector<std::int64_t> load_demands(const std::filesystem::path& path);
void write_demands(std::ostream& out, std::span<const std::int64_t> demands);

/// One row of the center comparison table.
struct CenterRow {
  int region_id = 0;
  Point geo;  ///< center of the cell holding the centroid
  Point alg;  ///< representative point
  std::optional<std::int64_t> demand;
  bool differs = false;
};

/// `demands` may be empty, in which case the demand column is left blank.
std::vector<CenterRow> center_table(const RegionMap& map, ObjectiveMode mode, std::span<const std::int64_t> demands);

/// Header: region_id,geo_x,geo_y,alg_x,alg_y,demand,differs. With
/// integer_centers the half-integer coordinates are rounded half down,
/// which prints each cell's index.
void write_center_table(std::ostream& out, std::span<const CenterRow> rows, bool integer_centers = false);
std::vector<CenterRow> read_center_table(std::istream& in);

/// Header row "region_id,<id>,<id>,..." then one row per region.
void write_distance_matrix(std::ostream& out, const DistanceMatrix& matrix);

// Instance JSON: {"sites": [[x, y], ...], "demands": [...], "c": .., "L": .., "M": .., "mode": "squared" | "euclidean" | null}
std::string instance_to_json(const FacilityInstance& instance);
FacilityInstance parse_instance_json(std::string_view text);

// Solution JSON: {"open": [bool, ...], "assign": [[x, y], ...], "cost": .., "status": "OPTIMAL" | "INFEASIBLE"}
std::string solution_to_json(const FacilitySolution& solution);
FacilitySolution parse_solution_json(std::string_view text);

/// Solution plus search counters and wall time in milliseconds.
std::string report_to_json(const SolveReport& report);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace regionloc
