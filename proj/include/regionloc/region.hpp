#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regionloc {

/// Planar coordinate in map units. x grows rightward, y grows upward.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

bool is_finite(const Point& p);

/// Unit grid cell covering [col, col + 1) x [row, row + 1).
/// Ordered by column first, then row, which is also the tie-break order
/// for representative points (smallest x, then smallest y).
struct Cell {
  std::int32_t col = 0;
  std::int32_t row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

Point cell_center(Cell c);

/// Cell whose half-open square holds p.
Cell cell_of(const Point& p);

/// A labeled set of unit cells. Cells are kept sorted; duplicates are kept
/// so that validate() can report them.
class RasterRegion {
 public:
  RasterRegion() = default;
  RasterRegion(int id, std::vector<Cell> cells);

  int id() const { return id_; }
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool has_cell(Cell c) const;
  RasterRegion translated(int dx, int dy) const;

  friend bool operator==(const RasterRegion&, const RasterRegion&) = default;

 private:
  int id_ = 0;
  std::vector<Cell> cells_;
};

class RegionMap {
 public:
  RegionMap() = default;
  RegionMap(int width, int height, std::vector<RasterRegion> regions);

  int width() const { return width_; }
  int height() const { return height_; }
  /// Borrowed view; do not hold it past the map's lifetime.
  std::span<const RasterRegion> regions() const { return regions_; }
  std::size_t region_count() const { return regions_.size(); }

  /// Region with the given id; throws Error if absent.
  const RasterRegion& region(int id) const;

  /// Row-major labels, index = row * width + col, 0 for unclaimed cells.
  /// Assumes the map is valid.
  std::vector<int> label_grid() const;

  friend bool operator==(const RegionMap&, const RegionMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<RasterRegion> regions_;
};

bool contains(const RasterRegion& region, const Point& p);
double area(const RasterRegion& region);

/// Mean of the cell centers. Need not lie inside the region.
Point centroid(const RasterRegion& region);

/// Cell holding the centroid, computed in exact integer arithmetic.
Cell centroid_cell(const RasterRegion& region);

enum class ViolationKind {
  InvalidDimensions,
  EmptyRegion,
  DuplicateCell,
  OutOfBounds,
  Overlap,
  DuplicateId,
  NonContiguousIds,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> region_ids;
  Cell cell{};
  std::string message;
};

std::vector<Violation> validate(const RegionMap& map);

/// Convex hull of a set of integer lattice points (cell indices), counter
/// clockwise, without collinear vertices. Degenerate inputs return one or
/// two vertices.
std::vector<Cell> convex_hull(std::vector<Cell> points);

/// Number of lattice points inside or on the hull polygon (Pick's theorem).
std::int64_t hull_lattice_count(std::span<const Cell> hull);

/// True when every cell whose center lies in the convex hull of the region's
/// cell centers belongs to the region.
bool is_digitally_convex(const RasterRegion& region);

}  // namespace regionloc
