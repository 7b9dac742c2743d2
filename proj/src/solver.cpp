#include "regionloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "regionloc/error.hpp"

namespace regionloc {

namespace {

using Clock = std::chrono::steady_clock;

FacilitySolution infeasible_solution(std::size_t n) {
  FacilitySolution sol;
  sol.open.assign(n, false);
  sol.assign = AssignmentMatrix(n);
  sol.status = SolveStatus::Infeasible;
  return sol;
}

class TiedAssignment {
 public:
  TiedAssignment(const FacilityInstance& instance, std::vector<std::size_t> sites,
                 std::vector<std::vector<std::size_t>> choices, std::vector<double> residual)
      : instance_(instance), sites_(std::move(sites)), choices_(std::move(choices)), residual_(std::move(residual)),
        pick_(sites_.size(), 0) {}

  bool run() { return place(0); }
  std::size_t facility_of(std::size_t k) const { return pick_[k]; }

 private:
  bool place(std::size_t k) {
    if (k == sites_.size()) return true;
    const auto demand = static_cast<double>(instance_.demand()[sites_[k]]);
    for (std::size_t y : choices_[k]) {
      if (residual_[y] < demand) continue;
      residual_[y] -= demand;
      pick_[k] = y;
      if (place(k + 1)) return true;
      residual_[y] += demand;
    }
    return false;
  }

  const FacilityInstance& instance_;
  std::vector<std::size_t> sites_;
  std::vector<std::vector<std::size_t>> choices_;
  std::vector<double> residual_;
  std::vector<std::size_t> pick_;
};

}  // namespace

std::optional<FacilitySolution> assign_feasible(const FacilityInstance& instance,
                                                std::span<const std::size_t> open_set) {
  const std::size_t n = instance.size();
  if (open_set.empty()) return std::nullopt;
  std::vector<std::size_t> open(open_set.begin(), open_set.end());
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  for (std::size_t y : open) {
    if (y >= n) throw Error("open facility index out of range");
  }

  const double eps = instance.tie_epsilon();
  const double capacity = instance.params().capacity;
  std::vector<double> load(n, 0.0);
  std::vector<std::size_t> target(n, n);
  std::vector<std::size_t> tied_sites;
  std::vector<std::vector<std::size_t>> tied_choices;

  for (std::size_t x = 0; x < n; ++x) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t y : open) nearest = std::min(nearest, instance.distance(x, y));
    std::vector<std::size_t> ties;
    for (std::size_t y : open) {
      if (instance.distance(x, y) <= nearest + eps) ties.push_back(y);
    }
    if (ties.size() == 1) {
      target[x] = ties.front();
      load[ties.front()] += static_cast<double>(instance.demand()[x]);
    } else {
      tied_sites.push_back(x);
      tied_choices.push_back(std::move(ties));
    }
  }
  for (std::size_t y : open) {
    if (load[y] > capacity) return std::nullopt;
  }

  if (!tied_sites.empty()) {
    // Largest demands first: they are the hardest to fit.
    std::vector<std::size_t> order(tied_sites.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return instance.demand()[tied_sites[a]] > instance.demand()[tied_sites[b]];
    });
    std::vector<std::size_t> sites;
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t k : order) {
      sites.push_back(tied_sites[k]);
      choices.push_back(tied_choices[k]);
    }
    std::vector<double> residual(n, 0.0);
    for (std::size_t y : open) residual[y] = capacity - load[y];
    TiedAssignment search(instance, sites, std::move(choices), std::move(residual));
    if (!search.run()) return std::nullopt;
    for (std::size_t k = 0; k < sites.size(); ++k) target[sites[k]] = search.facility_of(k);
  }

  FacilitySolution sol;
  sol.open.assign(n, false);
  for (std::size_t y : open) sol.open[y] = true;
  sol.assign = AssignmentMatrix(n);
  for (std::size_t x = 0; x < n; ++x) sol.assign.set(x, target[x], true);
  sol.total_cost = static_cast<double>(open.size()) * instance.params().fixed_cost;
  sol.status = SolveStatus::Optimal;
  return sol;
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const FacilityInstance& instance)
      : instance_(instance), n_(instance.size()), eps_(instance.tie_epsilon()) {
    // suffix_min_[x][i] = min over z >= i of d(x, z).
    suffix_min_.assign(n_, std::vector<double>(n_ + 1, std::numeric_limits<double>::infinity()));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t i = n_; i-- > 0;) {
        suffix_min_[x][i] = std::min(suffix_min_[x][i + 1], instance.distance(x, i));
      }
    }
  }

  std::optional<FacilitySolution> search(std::size_t k) {
    target_ = k;
    chosen_.clear();
    nearest_.assign(1, std::vector<double>(n_, std::numeric_limits<double>::infinity()));
    return visit(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  std::optional<FacilitySolution> visit(std::size_t next) {
    ++nodes_;
    if (chosen_.size() == target_) {
      ++leaves_;
      return assign_feasible(instance_, chosen_);
    }
    const std::size_t remaining = target_ - chosen_.size();
    if (n_ - next < remaining) return std::nullopt;
    if (!chosen_.empty() && forced_overload(next)) return std::nullopt;

    for (std::size_t j = next; j + remaining <= n_; ++j) {
      chosen_.push_back(j);
      const auto& parent = nearest_.back();
      std::vector<double> child(n_);
      for (std::size_t x = 0; x < n_; ++x) child[x] = std::min(parent[x], instance_.distance(x, j));
      nearest_.push_back(std::move(child));
      auto found = visit(j + 1);
      nearest_.pop_back();
      chosen_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  // Sites whose every remaining candidate is farther than their nearest
  // chosen facility (beyond the tie tolerance) will keep that facility in
  // any completion; if one chosen facility is their only nearest choice,
  // their demand lands on it no matter what is added later.
  bool forced_overload(std::size_t next) {
    const auto& nearest = nearest_.back();
    load_.assign(n_, 0.0);
    for (std::size_t x = 0; x < n_; ++x) {
      if (suffix_min_[x][next] <= nearest[x] + eps_) continue;
      std::size_t owner = n_;
      std::size_t ties = 0;
      for (std::size_t y : chosen_) {
        if (instance_.distance(x, y) <= nearest[x] + eps_) {
          owner = y;
          ++ties;
        }
      }
      if (ties != 1) continue;
      load_[owner] += static_cast<double>(instance_.demand()[x]);
      if (load_[owner] > instance_.params().capacity) return true;
    }
    return false;
  }

  const FacilityInstance& instance_;
  std::size_t n_;
  double eps_;
  std::size_t target_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<double>> nearest_;
  std::vector<std::vector<double>> suffix_min_;
  std::vector<double> load_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

SolveReport solve(const FacilityInstance& instance) {
  const auto start = Clock::now();
  const std::size_t n = instance.size();
  SolveReport report;

  const double bound = std::ceil(static_cast<double>(instance.total_demand()) / instance.params().capacity);
  const auto lower = static_cast<std::size_t>(std::max(1.0, bound));

  BranchAndBound bnb(instance);
  std::optional<FacilitySolution> best;
  for (std::size_t k = lower; k <= n && !best; ++k) best = bnb.search(k);

  report.solution = best ? std::move(*best) : infeasible_solution(n);
  report.nodes_explored = std::max<std::uint64_t>(1, bnb.nodes());
  report.subproblems_checked = bnb.leaves();
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

SolveReport exhaustive_solve(const FacilityInstance& instance, std::size_t cap) {
  const std::size_t n = instance.size();
  if (n > cap || n >= 63) throw Error("oracle cap exceeded");
  const auto start = Clock::now();
  SolveReport report;

  std::optional<FacilitySolution> best;
  std::vector<std::size_t> best_set;
  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t y = 0; y < n; ++y) {
      if (mask & (std::uint64_t{1} << y)) set.push_back(y);
    }
    ++report.subproblems_checked;
    auto sol = assign_feasible(instance, set);
    if (!sol) continue;
    const bool better = !best || set.size() < best_set.size() || (set.size() == best_set.size() && set < best_set);
    if (better) {
      best = std::move(sol);
      best_set = std::move(set);
    }
  }
  report.nodes_explored = report.subproblems_checked;
  report.solution = best ? std::move(*best) : infeasible_solution(n);
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

}  // namespace regionloc
