#include "regionloc/facility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

void check_shape(const std::vector<std::int64_t>& demand, const FacilityParams& params,
                 const DistanceMatrix& distances) {
  if (!(params.fixed_cost > 0.0) || !(params.capacity > 0.0) || !(params.big_m > 0.0) ||
      !std::isfinite(params.fixed_cost) || !std::isfinite(params.capacity) || !std::isfinite(params.big_m)) {
    throw Error("parameters must be positive and finite");
  }
  if (demand.size() != distances.size()) throw Error("demand count does not match site count");
  if (demand.empty()) throw Error("instance has no sites");
  for (std::int64_t a : demand) {
    if (a < 1) throw Error("demand must be at least 1");
  }
}

}  // namespace

FacilityInstance::FacilityInstance(std::vector<Point> sites, std::vector<std::int64_t> demand, FacilityParams params,
                                   DistanceMatrix distances)
    : sites_(std::move(sites)), demand_(std::move(demand)), params_(params), distances_(std::move(distances)) {
  if (sites_.size() != distances_.size()) throw Error("site count does not match distance matrix");
  check_shape(demand_, params_, distances_);
}

std::int64_t FacilityInstance::total_demand() const {
  return std::accumulate(demand_.begin(), demand_.end(), std::int64_t{0});
}

double FacilityInstance::tie_epsilon() const { return 1e-9 * distances_.max_entry(); }

void validate_model(const FacilityInstance& instance) {
  for (std::int64_t a : instance.demand()) {
    if (static_cast<double>(a) > instance.params().capacity) throw Error("unservable demand");
  }
  if (instance.params().big_m <= instance.distances().max_entry()) throw Error("big-M too small");
}

FacilityInstance build_instance(const RegionMap& map, ObjectiveMode mode, std::span<const std::int64_t> demands,
                                FacilityParams params) {
  if (demands.size() != map.region_count()) throw Error("demand count does not match region count");
  auto sites = representative_points(map, mode);
  DistanceMatrix distances = distance_matrix(map, mode);
  FacilityInstance instance(std::move(sites), std::vector<std::int64_t>(demands.begin(), demands.end()), params,
                            std::move(distances));
  validate_model(instance);
  return instance;
}

FacilityInstance build_instance_from_sites(std::vector<Point> sites, std::vector<std::int64_t> demands,
                                           FacilityParams params, std::optional<ObjectiveMode> mode, double p) {
  for (const Point& s : sites) {
    if (!is_finite(s)) throw Error("site coordinates must be finite");
  }
  std::vector<int> ids(sites.size());
  std::iota(ids.begin(), ids.end(), 1);
  DistanceMatrix distances(std::move(ids), sites, p, mode);
  FacilityInstance instance(std::move(sites), std::move(demands), params, std::move(distances));
  validate_model(instance);
  return instance;
}

std::string to_string(SolveStatus status) { return status == SolveStatus::Optimal ? "OPTIMAL" : "INFEASIBLE"; }

std::size_t FacilitySolution::open_count() const {
  return static_cast<std::size_t>(std::count(open.begin(), open.end(), true));
}

std::vector<std::size_t> FacilitySolution::open_sites() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < open.size(); ++y) {
    if (open[y]) out.push_back(y);
  }
  return out;
}

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Dimensions: return "dimensions";
    case ConstraintKind::Objective: return "objective";
    case ConstraintKind::ServedByClosed: return "served-by-closed";
    case ConstraintKind::NotNearest: return "not-nearest";
    case ConstraintKind::OverCapacity: return "over-capacity";
    case ConstraintKind::AssignmentCount: return "assignment-count";
  }
  return "unknown";
}

std::vector<SolutionViolation> check_solution(const FacilityInstance& instance, const FacilitySolution& solution) {
  std::vector<SolutionViolation> out;
  if (solution.status != SolveStatus::Optimal) return out;

  const std::size_t n = instance.size();
  if (solution.open.size() != n || solution.assign.size() != n) {
    out.push_back({ConstraintKind::Dimensions, 0, 0, "solution size does not match instance"});
    return out;
  }

  const double expected_cost = static_cast<double>(solution.open_count()) * instance.params().fixed_cost;
  if (std::abs(solution.total_cost - expected_cost) > 1e-9 * std::max(1.0, expected_cost)) {
    out.push_back({ConstraintKind::Objective, 0, 0, "total cost does not equal open count x fixed cost"});
  }

  const double eps = instance.tie_epsilon();
  std::vector<double> load(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t served = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!solution.assign.at(x, y)) continue;
      ++served;
      load[y] += static_cast<double>(instance.demand()[x]);
      if (!solution.open[y]) {
        out.push_back({ConstraintKind::ServedByClosed, x, y, "site served by a closed facility"});
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (solution.open[z] && instance.distance(x, y) > instance.distance(x, z) + eps) {
          out.push_back({ConstraintKind::NotNearest, x, y, "a closer facility is open at site " + std::to_string(z)});
          break;
        }
      }
    }
    if (served != 1) {
      out.push_back({ConstraintKind::AssignmentCount, x, 0, "site served by " + std::to_string(served) + " facilities"});
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    if (load[y] > instance.params().capacity) {
      out.push_back({ConstraintKind::OverCapacity, 0, y, "facility load exceeds capacity"});
    }
  }
  return out;
}

}  // namespace regionloc
