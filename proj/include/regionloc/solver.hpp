#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "regionloc/facility.hpp"

namespace regionloc {

struct SolveReport {
  FacilitySolution solution;
  std::uint64_t nodes_explored = 0;
  std::uint64_t subproblems_checked = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Assignment for a fixed set of open facilities. Each site goes to one of
/// its nearest open facilities (ties within instance.tie_epsilon()); among
/// tied choices an assignment respecting capacity is searched exactly.
/// Returns nullopt when no such assignment exists.
std::optional<FacilitySolution> assign_feasible(const FacilityInstance& instance,
                                                std::span<const std::size_t> open_set);

/// Minimum-cost open set, searched by increasing size from the capacity
/// lower bound ceil(total demand / L). Within a size, sets are visited in
/// lexicographic order with subtree pruning, so the first feasible set is
/// the lexicographically smallest optimum.
SolveReport solve(const FacilityInstance& instance);

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Enumerates all 2^n - 1 open sets; same tie-break as solve(). Throws
/// Error("oracle cap exceeded") when n > cap.
SolveReport exhaustive_solve(const FacilityInstance& instance, std::size_t cap = kDefaultOracleCap);

}  // namespace regionloc
