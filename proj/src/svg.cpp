#include "regionloc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

// Golden-ratio hue walk so neighboring ids get distant colors.
std::string region_color(int id) {
  const double hue = std::fmod(id * 0.618033988749895, 1.0) * 6.0;
  const double s = 0.45;
  const double v = 0.92;
  const int sector = static_cast<int>(hue) % 6;
  const double f = hue - std::floor(hue);
  const double p = v * (1 - s);
  const double q = v * (1 - s * f);
  const double t = v * (1 - s * (1 - f));
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = v, g = t, b = p; break;
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = t; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = t, g = p, b = v; break;
    default: r = v, g = p, b = q; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(std::lround(r * 255)),
                static_cast<int>(std::lround(g * 255)), static_cast<int>(std::lround(b * 255)));
  return buf;
}

class Canvas {
 public:
  Canvas(int height, double scale) : height_(height), scale_(scale) {}
  std::string x(double v) const { return format_number(v * scale_); }
  std::string y(double v) const { return format_number((height_ - v) * scale_); }
  std::string len(double v) const { return format_number(v * scale_); }
  double scale() const { return scale_; }

 private:
  int height_;
  double scale_;
};

void check_overlay(const RegionMap& map, const RenderOverlay& overlay) {
  const std::size_t n = map.region_count();
  if (!overlay.centers.empty()) {
    std::set<int> map_ids, overlay_ids;
    for (const auto& r : map.regions()) map_ids.insert(r.id());
    for (const auto& row : overlay.centers) overlay_ids.insert(row.region_id);
    if (map_ids != overlay_ids || overlay.centers.size() != n) throw Error("center overlay does not match map region ids");
  }
  if (!overlay.sites.empty() && overlay.sites.size() != n) throw Error("site overlay does not match region count");
  if (!overlay.demands.empty() && overlay.demands.size() != n) throw Error("demand overlay does not match region count");
  if (overlay.solution) {
    if (overlay.solution->open.size() != n || overlay.solution->assign.size() != n) {
      throw Error("solution overlay does not match region count");
    }
    if (overlay.sites.size() != n) throw Error("solution overlay needs one site per region");
  }
}

}  // namespace

std::string render_svg(const RegionMap& map, const RenderOverlay& overlay, double cell_px) {
  check_overlay(map, overlay);
  if (cell_px <= 0.0) cell_px = std::max(2.0, std::floor(800.0 / std::max(map.width(), map.height())));
  const Canvas cv(map.height(), cell_px);
  const double glyph = std::max(0.6, 6.0 / cell_px);  // map units

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cv.len(map.width()) << "\" height=\""
      << cv.len(map.height()) << "\" viewBox=\"0 0 " << cv.len(map.width()) << ' ' << cv.len(map.height()) << "\">\n";
  out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#222\"/></marker></defs>\n";
  out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << cv.len(map.width()) << "\" height=\""
      << cv.len(map.height()) << "\" fill=\"#ffffff\"/>\n";

  // Region fills as horizontal runs of cells.
  for (const auto& region : map.regions()) {
    out << "<g class=\"region\" id=\"region-" << region.id() << "\" fill=\"" << region_color(region.id()) << "\">\n";
    std::vector<Cell> cells(region.cells().begin(), region.cells().end());
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    for (std::size_t i = 0; i < cells.size();) {
      std::size_t j = i + 1;
      while (j < cells.size() && cells[j].row == cells[i].row && cells[j].col == cells[j - 1].col + 1) ++j;
      out << "<rect x=\"" << cv.x(cells[i].col) << "\" y=\"" << cv.y(cells[i].row + 1) << "\" width=\""
          << cv.len(static_cast<double>(j - i)) << "\" height=\"" << cv.len(1) << "\"/>\n";
      i = j;
    }
    out << "</g>\n";
  }

  if (overlay.solution && overlay.solution->status == SolveStatus::Optimal) {
    const auto& sol = *overlay.solution;
    out << "<g class=\"assignments\" stroke=\"#222\" stroke-width=\"1\">\n";
    for (std::size_t x = 0; x < sol.assign.size(); ++x) {
      for (std::size_t y = 0; y < sol.assign.size(); ++y) {
        if (!sol.assign.at(x, y) || x == y) continue;
        const Point a = overlay.sites[x];
        const Point b = overlay.sites[y];
        out << "<line class=\"assignment\" x1=\"" << cv.x(a.x) << "\" y1=\"" << cv.y(a.y) << "\" x2=\"" << cv.x(b.x)
            << "\" y2=\"" << cv.y(b.y) << "\" marker-end=\"url(#arrow)\"/>\n";
      }
    }
    out << "</g>\n<g class=\"facilities\" fill=\"#111\">\n";
    for (std::size_t y = 0; y < sol.open.size(); ++y) {
      if (!sol.open[y]) continue;
      const Point p = overlay.sites[y];
      out << "<rect class=\"facility\" x=\"" << cv.x(p.x - glyph) << "\" y=\"" << cv.y(p.y + glyph) << "\" width=\""
          << cv.len(2 * glyph) << "\" height=\"" << cv.len(2 * glyph) << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (!overlay.centers.empty()) {
    out << "<g class=\"centers\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (const auto& row : overlay.centers) {
      out << "<circle class=\"geo-center\" data-region=\"" << row.region_id << "\" cx=\"" << cv.x(row.geo.x)
          << "\" cy=\"" << cv.y(row.geo.y) << "\" r=\"" << cv.len(glyph) << "\" stroke=\"#1f4e9c\"/>\n";
      const Point a = row.alg;
      out << "<path class=\"alg-center\" data-region=\"" << row.region_id << "\" d=\"M" << cv.x(a.x - glyph) << ','
          << cv.y(a.y - glyph) << " L" << cv.x(a.x + glyph) << ',' << cv.y(a.y + glyph) << " M" << cv.x(a.x - glyph)
          << ',' << cv.y(a.y + glyph) << " L" << cv.x(a.x + glyph) << ',' << cv.y(a.y - glyph)
          << "\" stroke=\"#b3261e\"/>\n";
    }
    out << "</g>\n";
  }

  if (!overlay.demands.empty()) {
    std::vector<Point> anchors = overlay.sites;
    if (anchors.empty()) {
      for (const auto& row : overlay.centers) anchors.push_back(row.alg);
    }
    if (anchors.empty()) {
      for (const auto& region : map.regions()) anchors.push_back(cell_center(centroid_cell(region)));
    }
    out << "<g class=\"demands\" font-family=\"sans-serif\" font-size=\"" << format_number(std::max(8.0, 2.5 * cell_px))
        << "\" fill=\"#000\">\n";
    for (std::size_t i = 0; i < overlay.demands.size(); ++i) {
      out << "<text class=\"demand\" x=\"" << cv.x(anchors[i].x + glyph) << "\" y=\"" << cv.y(anchors[i].y + glyph)
          << "\">" << overlay.demands[i] << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace regionloc
