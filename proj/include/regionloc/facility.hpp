#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regionloc/distance.hpp"
#include "regionloc/region.hpp"
#include "regionloc/rep_point.hpp"

namespace regionloc {

struct FacilityParams {
  double fixed_cost = 200.0;  ///< c, paid per open facility
  double capacity = 50.0;     ///< L, demand units one facility can serve
  double big_m = 10000.0;     ///< M, must exceed every distance
};

/// Capacitated location instance with closest assignment. Every site is both
/// a demand point and a candidate facility. The constructor checks shapes,
/// positive parameters and demands >= 1; see validate_model() for the rest.
class FacilityInstance {
 public:
  FacilityInstance(std::vector<Point> sites, std::vector<std::int64_t> demand, FacilityParams params,
                   DistanceMatrix distances);

  std::size_t size() const { return sites_.size(); }
  const std::vector<Point>& sites() const { return sites_; }
  const std::vector<std::int64_t>& demand() const { return demand_; }
  const FacilityParams& params() const { return params_; }
  const DistanceMatrix& distances() const { return distances_; }
  double distance(std::size_t x, std::size_t y) const { return distances_.at(x, y); }
  std::int64_t total_demand() const;

  /// Two distances closer than this count as equal (1e-9 x max distance).
  double tie_epsilon() const;

 private:
  std::vector<Point> sites_;
  std::vector<std::int64_t> demand_;
  FacilityParams params_;
  DistanceMatrix distances_;
};

/// Throws Error("unservable demand") when some demand exceeds L and
/// Error("big-M too small") when M does not exceed every distance.
void validate_model(const FacilityInstance& instance);

/// Sites at each region's representative point. Validated with validate_model().
FacilityInstance build_instance(const RegionMap& map, ObjectiveMode mode, std::span<const std::int64_t> demands,
                                FacilityParams params);

/// Sites given directly as points (distances with exponent p). Validated with
/// validate_model().
FacilityInstance build_instance_from_sites(std::vector<Point> sites, std::vector<std::int64_t> demands,
                                           FacilityParams params, std::optional<ObjectiveMode> mode = std::nullopt,
                                           double p = 2.0);

/// Square boolean matrix, entry (x, y) set when site x is served from y.
class AssignmentMatrix {
 public:
  AssignmentMatrix() = default;
  explicit AssignmentMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool at(std::size_t x, std::size_t y) const { return cells_[x * n_ + y] != 0; }
  void set(std::size_t x, std::size_t y, bool value) { cells_[x * n_ + y] = value ? 1 : 0; }

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

enum class SolveStatus { Optimal, Infeasible };

std::string to_string(SolveStatus status);

struct FacilitySolution {
  std::vector<bool> open;
  AssignmentMatrix assign;
  double total_cost = 0.0;
  SolveStatus status = SolveStatus::Infeasible;

  std::size_t open_count() const;
  /// Indices of open facilities, ascending.
  std::vector<std::size_t> open_sites() const;

  friend bool operator==(const FacilitySolution&, const FacilitySolution&) = default;
};

/// Which model constraint a solution breaks.
enum class ConstraintKind {
  Dimensions,       ///< vectors do not match the instance size
  Objective,        ///< cost differs from open count x c
  ServedByClosed,   ///< gamma_xy = 1 while rho_y = 0
  NotNearest,       ///< an open facility is strictly closer than the assigned one
  OverCapacity,     ///< served demand exceeds L
  AssignmentCount,  ///< site not served by exactly one facility
};

std::string to_string(ConstraintKind kind);

struct SolutionViolation {
  ConstraintKind kind;
  std::size_t site = 0;
  std::size_t facility = 0;
  std::string detail;
};

/// Empty iff an OPTIMAL solution satisfies every constraint. Infeasible
/// solutions carry no assignment and are not checked.
std::vector<SolutionViolation> check_solution(const FacilityInstance& instance, const FacilitySolution& solution);

}  // namespace regionloc
