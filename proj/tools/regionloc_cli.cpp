// regionloc: representative points, distance matrices and capacitated
// closest-assignment location on raster region maps.
//
// Exit codes: 0 success, 1 usage, 2 input parse/validation, 3 infeasible.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regionloc/distance.hpp"
#include "regionloc/error.hpp"
#include "regionloc/facility.hpp"
#include "regionloc/io.hpp"
#include "regionloc/map_gen.hpp"
#include "regionloc/rep_point.hpp"
#include "regionloc/solver.hpp"
#include "regionloc/svg.hpp"

namespace {

using namespace regionloc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

ObjectiveMode mode_of(const std::string& text) { return parse_objective_mode(text); }

int run_genmap(const GenConfig& config, const std::string& out, const std::string& demands_out) {
  const GeneratedMap gen = generate(config);
  std::ostringstream map_text;
  write_label_grid(map_text, gen.map);
  emit(out, map_text.str());
  if (!demands_out.empty()) {
    std::ostringstream d;
    write_demands(d, gen.demands);
    emit(demands_out, d.str());
  }
  return kExitOk;
}

int run_centers(const std::string& map_path, const std::string& mode, const std::string& demands_path,
                bool integer_centers, const std::string& out) {
  const RegionMap map = load_map(map_path);
  std::vector<std::int64_t> demands;
  if (!demands_path.empty()) demands = load_demands(demands_path);
  if (!demands.empty() && demands.size() != map.region_count()) throw ParseError("demand count does not match region count");
  std::ostringstream text;
  write_center_table(text, center_table(map, mode_of(mode), demands), integer_centers);
  emit(out, text.str());
  return kExitOk;
}

int run_distmat(const std::string& map_path, const std::string& sites_path, const std::string& mode, bool geometric,
                double p, const std::string& out) {
  if (map_path.empty() == sites_path.empty()) throw UsageError("distmat needs exactly one of --map or --sites");
  std::ostringstream text;
  if (!map_path.empty()) {
    if (p != 2.0) throw UsageError("--p applies to --sites only; region distances are euclidean");
    const RegionMap map = load_map(map_path);
    write_distance_matrix(text, geometric ? centroid_distance_matrix(map) : distance_matrix(map, mode_of(mode)));
  } else {
    const FacilityInstance instance = parse_instance_json(read_text(sites_path));
    std::vector<int> ids(instance.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i + 1);
    write_distance_matrix(text, DistanceMatrix(ids, instance.sites(), p, instance.distances().mode()));
  }
  emit(out, text.str());
  return kExitOk;
}

struct SolveArgs {
  std::string map_path;
  std::string demands_path;
  std::string instance_path;
  std::string mode = "squared";
  FacilityParams params;
  std::string out;
  std::string report;
  std::string instance_out;
};

int run_solve(const SolveArgs& a) {
  std::optional<FacilityInstance> instance;
  if (!a.instance_path.empty()) {
    if (!a.map_path.empty()) throw UsageError("use either --instance or --map, not both");
    instance.emplace(parse_instance_json(read_text(a.instance_path)));
  } else {
    if (a.map_path.empty() || a.demands_path.empty()) throw UsageError("solve needs --instance, or --map with --demands");
    const RegionMap map = load_map(a.map_path);
    const auto demands = load_demands(a.demands_path);
    instance.emplace(build_instance(map, mode_of(a.mode), demands, a.params));
  }
  if (!a.instance_out.empty()) write_text(a.instance_out, instance_to_json(*instance));

  const SolveReport report = solve(*instance);
  const FacilitySolution& sol = report.solution;
  if (!a.out.empty()) write_text(a.out, solution_to_json(sol));
  if (!a.report.empty()) write_text(a.report, report_to_json(report));

  std::cout << "status: " << to_string(sol.status) << '\n';
  if (sol.status == SolveStatus::Infeasible) {
    std::cerr << "no open set admits a closest assignment within capacity\n";
    return kExitInfeasible;
  }
  std::cout << "open facilities: " << sol.open_count() << '\n';
  std::cout << "cost: " << format_number(sol.total_cost) << '\n';
  std::cout << "assignments (site -> facility, 1-based):\n";
  for (std::size_t x = 0; x < sol.assign.size(); ++x) {
    for (std::size_t y = 0; y < sol.assign.size(); ++y) {
      if (sol.assign.at(x, y)) std::cout << "  " << x + 1 << " -> " << y + 1 << '\n';
    }
  }
  return kExitOk;
}

int run_render(const std::string& map_path, const std::string& centers_path, const std::string& solution_path,
               const std::string& demands_path, const std::string& mode, double cell_px, const std::string& out) {
  const RegionMap map = load_map(map_path);
  RenderOverlay overlay;
  if (!centers_path.empty()) {
    std::istringstream in(read_text(centers_path));
    overlay.centers = read_center_table(in);
  }
  if (!demands_path.empty()) overlay.demands = load_demands(demands_path);
  if (!solution_path.empty()) {
    overlay.solution = parse_solution_json(read_text(solution_path));
    if (!overlay.centers.empty()) {
      for (const auto& row : overlay.centers) overlay.sites.push_back(row.alg);
    } else {
      overlay.sites = representative_points(map, mode_of(mode));
    }
  }
  emit(out, render_svg(map, overlay, cell_px));
  return kExitOk;
}

int run_fixture(int case_id, const std::string& out) {
  std::ostringstream text;
  write_label_grid(text, fixture(case_id));
  emit(out, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representative points and closest-assignment facility location on raster region maps"};
  app.require_subcommand(1);
  int result = kExitOk;

  const std::string mode_help = "objective for representative points: euclidean or squared";
  auto mode_check = CLI::IsMember({"euclidean", "squared"});

  // genmap
  GenConfig gen;
  std::string gen_out, gen_demands;
  auto* genmap = app.add_subcommand("genmap", "generate a random region map and demands");
  genmap->add_option("--width", gen.width, "map width in cells")->capture_default_str();
  genmap->add_option("--height", gen.height, "map height in cells")->capture_default_str();
  genmap->add_option("--regions", gen.region_count, "number of regions")->capture_default_str();
  genmap->add_option("--bias", gen.concavity_bias, "fraction of regions carved non-convex")->capture_default_str();
  genmap->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  genmap->add_option("--demand-min", gen.demand_min, "smallest demand")->capture_default_str();
  genmap->add_option("--demand-max", gen.demand_max, "largest demand")->capture_default_str();
  genmap->add_option("--out", gen_out, "labeled grid CSV (default stdout)");
  genmap->add_option("--demands-out", gen_demands, "demands JSON");
  genmap->callback([&] { result = run_genmap(gen, gen_out, gen_demands); });

  // centers
  std::string c_map, c_mode = "squared", c_demands, c_out;
  bool c_integer = false;
  auto* centers = app.add_subcommand("centers", "compare centroid cells with representative points");
  centers->add_option("--map", c_map, "map file (.csv grid or .json polygons)")->required();
  centers->add_option("--mode", c_mode, mode_help)->check(mode_check)->capture_default_str();
  centers->add_option("--demands", c_demands, "demands JSON for the demand column");
  centers->add_flag("--integer-centers", c_integer, "print cell indices instead of half-integer centers");
  centers->add_option("--out", c_out, "center table CSV (default stdout)");
  centers->callback([&] { result = run_centers(c_map, c_mode, c_demands, c_integer, c_out); });

  // distmat
  std::string d_map, d_sites, d_mode = "squared", d_out;
  bool d_geo = false;
  double d_p = 2.0;
  auto* distmat = app.add_subcommand("distmat", "region distance matrix");
  distmat->add_option("--map", d_map, "map file");
  distmat->add_option("--sites", d_sites, "instance JSON whose sites are used directly");
  distmat->add_option("--mode", d_mode, mode_help)->check(mode_check)->capture_default_str();
  distmat->add_flag("--geometric", d_geo, "use centroids instead of representative points");
  distmat->add_option("--p", d_p, "l_p exponent between sites (with --sites)")->check(CLI::Range(1.0, HUGE_VAL));
  distmat->add_option("--out", d_out, "matrix CSV (default stdout)");
  distmat->callback([&] { result = run_distmat(d_map, d_sites, d_mode, d_geo, d_p, d_out); });

  // solve
  SolveArgs s;
  auto* solve_cmd = app.add_subcommand("solve", "solve the capacitated closest-assignment location model");
  solve_cmd->add_option("--map", s.map_path, "map file");
  solve_cmd->add_option("--demands", s.demands_path, "demands JSON (with --map)");
  solve_cmd->add_option("--instance", s.instance_path, "instance JSON with sites given directly");
  solve_cmd->add_option("--mode", s.mode, mode_help)->check(mode_check)->capture_default_str();
  solve_cmd->add_option("--c", s.params.fixed_cost, "fixed cost per facility")->capture_default_str();
  solve_cmd->add_option("--L", s.params.capacity, "facility capacity")->capture_default_str();
  solve_cmd->add_option("--M", s.params.big_m, "big-M, must exceed every distance")->capture_default_str();
  solve_cmd->add_option("--out", s.out, "solution JSON");
  solve_cmd->add_option("--report", s.report, "solution plus search statistics and timing");
  solve_cmd->add_option("--instance-out", s.instance_out, "write the built instance JSON");
  solve_cmd->callback([&] { result = run_solve(s); });

  // render
  std::string r_map, r_centers, r_solution, r_demands, r_mode = "squared", r_out;
  double r_px = 0.0;
  auto* render = app.add_subcommand("render", "draw the map with optional overlays as SVG");
  render->add_option("--map", r_map, "map file")->required();
  render->add_option("--centers", r_centers, "center table CSV");
  render->add_option("--solution", r_solution, "solution JSON");
  render->add_option("--demands", r_demands, "demands JSON");
  render->add_option("--mode", r_mode, mode_help)->check(mode_check)->capture_default_str();
  render->add_option("--cell-px", r_px, "pixels per cell (default fits ~800 px)");
  render->add_option("--out", r_out, "SVG file (default stdout)");
  render->callback([&] { result = run_render(r_map, r_centers, r_solution, r_demands, r_mode, r_px, r_out); });

  // fixture
  int f_case = 0;
  std::string f_out;
  auto* fixture_cmd = app.add_subcommand("fixture", "write a built-in special-case map");
  fixture_cmd->add_option("case", f_case, "case id")->required()->check(CLI::Range(1, 3));
  fixture_cmd->add_option("--out", f_out, "labeled grid CSV (default stdout)");
  fixture_cmd->callback([&] { result = run_fixture(f_case, f_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const regionloc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return result;
}
