#include "regionloc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "regionloc/error.hpp"

namespace regionloc {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_integer(std::string_view text, const std::string& what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ParseError("invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Point parse_json_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a point [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double json_number(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) throw ParseError(std::string("missing numeric field '") + key + "'");
  return obj[key].get<double>();
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, ptr);
}

RegionMap read_label_grid(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<int> row;
    for (std::string_view field : split(line, ',')) {
      const int label = parse_integer<int>(field, "label");
      if (label < 0) throw ParseError("labels must be non-negative");
      row.push_back(label);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                       " columns, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("map file has no rows");

  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().size());
  std::map<int, std::vector<Cell>> cells;
  for (int r = 0; r < height; ++r) {
    const std::int32_t y = height - 1 - r;
    for (std::int32_t x = 0; x < width; ++x) {
      const int label = rows[r][x];
      if (label != 0) cells[label].push_back({x, y});
    }
  }
  std::vector<RasterRegion> regions;
  for (auto& [id, list] : cells) regions.emplace_back(id, std::move(list));
  return RegionMap(width, height, std::move(regions));
}

void write_label_grid(std::ostream& out, const RegionMap& map) {
  const auto labels = map.label_grid();
  for (int y = map.height() - 1; y >= 0; --y) {
    for (int x = 0; x < map.width(); ++x) {
      if (x > 0) out << ',';
      out << labels[static_cast<std::size_t>(y) * map.width() + x];
    }
    out << '\n';
  }
}

RasterRegion rasterize_polygon(int id, const std::vector<std::vector<Point>>& rings, int width, int height) {
  std::vector<Cell> cells;
  for (std::int32_t row = 0; row < height; ++row) {
    const double py = row + 0.5;
    for (std::int32_t col = 0; col < width; ++col) {
      const double px = col + 0.5;
      bool inside = false;
      for (const auto& ring : rings) {
        const std::size_t m = ring.size();
        for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
          const Point& a = ring[i];
          const Point& b = ring[j];
          if ((a.y > py) != (b.y > py) && px < (b.x - a.x) * (py - a.y) / (b.y - a.y) + a.x) inside = !inside;
        }
      }
      if (inside) cells.push_back({col, row});
    }
  }
  return RasterRegion(id, std::move(cells));
}

RegionMap read_polygon_map(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = parse_json(buffer.str(), "polygon map");
  if (!doc.is_object() || !doc.contains("regions") || !doc["regions"].is_array()) {
    throw ParseError("polygon map needs width, height and a regions array");
  }
  const double w = json_number(doc, "width");
  const double h = json_number(doc, "height");
  if (w != std::floor(w) || h != std::floor(h) || w < 1 || h < 1) throw ParseError("map dimensions must be positive integers");
  const int width = static_cast<int>(w);
  const int height = static_cast<int>(h);

  std::vector<RasterRegion> regions;
  for (const json& r : doc["regions"]) {
    if (!r.is_object() || !r.contains("id") || !r["id"].is_number_integer() || !r.contains("rings") ||
        !r["rings"].is_array()) {
      throw ParseError("each region needs an integer id and a rings array");
    }
    std::vector<std::vector<Point>> rings;
    for (const json& ring : r["rings"]) {
      if (!ring.is_array() || ring.size() < 3) throw ParseError("a ring needs at least three vertices");
      std::vector<Point> pts;
      for (const json& v : ring) pts.push_back(parse_json_point(v));
      rings.push_back(std::move(pts));
    }
    regions.push_back(rasterize_polygon(r["id"].get<int>(), rings, width, height));
  }
  return RegionMap(width, height, std::move(regions));
}

RegionMap load_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file " + path.string());
  RegionMap map = path.extension() == ".json" ? read_polygon_map(in) : read_label_grid(in);
  const auto violations = validate(map);
  if (!violations.empty()) {
    std::string message = "invalid map " + path.string() + ":";
    for (const auto& v : violations) message += "\n  " + to_string(v.kind) + ": " + v.message;
    throw ParseError(message);
  }
  return map;
}

void save_map(const std::filesystem::path& path, const RegionMap& map) {
  std::ostringstream out;
  write_label_grid(out, map);
  write_text(path, out.str());
}

std::vector<std::int64_t> read_demands(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = parse_json(buffer.str(), "demands");
  if (!doc.is_array()) throw ParseError("demands must be a JSON array");
  std::vector<std::int64_t> out;
  for (const json& v : doc) {
    if (!v.is_number_integer()) throw ParseError("demands must be integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::vector<std::int64_t> load_demands(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open demands file " + path.string());
  return read_demands(in);
}

void write_demands(std::ostream& out, std::span<const std::int64_t> demands) {
  out << json(std::vector<std::int64_t>(demands.begin(), demands.end())).dump() << '\n';
}

std::vector<CenterRow> center_table(const RegionMap& map, ObjectiveMode mode, std::span<const std::int64_t> demands) {
  if (!demands.empty() && demands.size() != map.region_count()) {
    throw Error("demand count does not match region count");
  }
  std::vector<CenterRow> rows;
  for (std::size_t i = 0; i < map.region_count(); ++i) {
    const RasterRegion& region = map.regions()[i];
    CenterRow row;
    row.region_id = region.id();
    const Cell geo_cell = centroid_cell(region);
    row.geo = cell_center(geo_cell);
    row.alg = representative_point(region, mode).point;
    row.differs = cell_of(row.alg) != geo_cell;
    if (!demands.empty()) row.demand = demands[i];
    rows.push_back(row);
  }
  return rows;
}

void write_center_table(std::ostream& out, std::span<const CenterRow> rows, bool integer_centers) {
  auto coord = [&](double v) { return format_number(integer_centers ? std::ceil(v - 0.5) : v); };
  out << "region_id,geo_x,geo_y,alg_x,alg_y,demand,differs\n";
  for (const CenterRow& r : rows) {
    out << r.region_id << ',' << coord(r.geo.x) << ',' << coord(r.geo.y) << ',' << coord(r.alg.x) << ','
        << coord(r.alg.y) << ',';
    if (r.demand) out << *r.demand;
    out << ',' << (r.differs ? "true" : "false") << '\n';
  }
}

std::vector<CenterRow> read_center_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "region_id,geo_x,geo_y,alg_x,alg_y,demand,differs") {
    throw ParseError("center table header mismatch");
  }
  std::vector<CenterRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw ParseError("center table rows need 7 fields");
    CenterRow r;
    r.region_id = parse_integer<int>(f[0], "region id");
    r.geo = {parse_double(f[1], "geo_x"), parse_double(f[2], "geo_y")};
    r.alg = {parse_double(f[3], "alg_x"), parse_double(f[4], "alg_y")};
    if (!f[5].empty()) r.demand = parse_integer<std::int64_t>(f[5], "demand");
    if (f[6] != "true" && f[6] != "false") throw ParseError("differs must be true or false");
    r.differs = f[6] == "true";
    rows.push_back(r);
  }
  return rows;
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& matrix) {
  out << "region_id";
  for (int id : matrix.ids()) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.ids()[i];
    for (std::size_t j = 0; j < matrix.size(); ++j) out << ',' << format_number(matrix.at(i, j));
    out << '\n';
  }
}

std::string instance_to_json(const FacilityInstance& instance) {
  json doc;
  json sites = json::array();
  for (const Point& p : instance.sites()) sites.push_back({p.x, p.y});
  doc["sites"] = sites;
  doc["demands"] = instance.demand();
  doc["c"] = instance.params().fixed_cost;
  doc["L"] = instance.params().capacity;
  doc["M"] = instance.params().big_m;
  const auto mode = instance.distances().mode();
  doc["mode"] = mode ? json(std::string(to_string(*mode))) : json(nullptr);
  return doc.dump(2) + "\n";
}

FacilityInstance parse_instance_json(std::string_view text) {
  const json doc = parse_json(text, "instance");
  if (!doc.is_object() || !doc.contains("sites") || !doc["sites"].is_array() || !doc.contains("demands") ||
      !doc["demands"].is_array()) {
    throw ParseError("instance needs sites and demands arrays");
  }
  std::vector<Point> sites;
  for (const json& s : doc["sites"]) sites.push_back(parse_json_point(s));
  std::vector<std::int64_t> demands;
  for (const json& d : doc["demands"]) {
    if (!d.is_number_integer()) throw ParseError("demands must be integers");
    demands.push_back(d.get<std::int64_t>());
  }
  if (sites.size() != demands.size()) throw ParseError("sites and demands differ in length");
  FacilityParams params{json_number(doc, "c"), json_number(doc, "L"), json_number(doc, "M")};
  std::optional<ObjectiveMode> mode;
  if (doc.contains("mode") && !doc["mode"].is_null()) {
    if (!doc["mode"].is_string()) throw ParseError("mode must be a string or null");
    try {
      mode = parse_objective_mode(doc["mode"].get<std::string>());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  return build_instance_from_sites(std::move(sites), std::move(demands), params, mode);
}

std::string solution_to_json(const FacilitySolution& solution) {
  json doc;
  json open = json::array();
  for (bool b : solution.open) open.push_back(b);
  doc["open"] = open;
  json assign = json::array();
  for (std::size_t x = 0; x < solution.assign.size(); ++x) {
    for (std::size_t y = 0; y < solution.assign.size(); ++y) {
      if (solution.assign.at(x, y)) assign.push_back({x, y});
    }
  }
  doc["assign"] = assign;
  doc["cost"] = solution.status == SolveStatus::Optimal ? json(solution.total_cost) : json(nullptr);
  doc["status"] = to_string(solution.status);
  return doc.dump(2) + "\n";
}

FacilitySolution parse_solution_json(std::string_view text) {
  const json doc = parse_json(text, "solution");
  if (!doc.is_object() || !doc.contains("open") || !doc["open"].is_array() || !doc.contains("assign") ||
      !doc["assign"].is_array() || !doc.contains("status") || !doc["status"].is_string()) {
    throw ParseError("solution needs open, assign and status");
  }
  FacilitySolution sol;
  for (const json& b : doc["open"]) {
    if (!b.is_boolean()) throw ParseError("open entries must be booleans");
    sol.open.push_back(b.get<bool>());
  }
  const std::size_t n = sol.open.size();
  sol.assign = AssignmentMatrix(n);
  for (const json& pair : doc["assign"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      throw ParseError("assign entries must be [x_index, y_index]");
    }
    const auto x = pair[0].get<std::size_t>();
    const auto y = pair[1].get<std::size_t>();
    if (x >= n || y >= n) throw ParseError("assignment index out of range");
    sol.assign.set(x, y, true);
  }
  const std::string status = doc["status"].get<std::string>();
  if (status == "OPTIMAL") {
    sol.status = SolveStatus::Optimal;
    sol.total_cost = json_number(doc, "cost");
  } else if (status == "INFEASIBLE") {
    sol.status = SolveStatus::Infeasible;
  } else {
    throw ParseError("unknown status '" + status + "'");
  }
  return sol;
}

std::string report_to_json(const SolveReport& report) {
  json doc;
  doc["solution"] = json::parse(solution_to_json(report.solution));
  doc["nodes_explored"] = report.nodes_explored;
  doc["subproblems_checked"] = report.subproblems_checked;
  doc["wall_time_ms"] = std::chrono::duration<double, std::milli>(report.wall_time).count();
  return doc.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace regionloc
