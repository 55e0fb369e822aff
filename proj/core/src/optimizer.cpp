#include "persched/optimizer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "persched/arith.hpp"
#include "persched/errors.hpp"
#include "persched/state.hpp"

namespace persched {
namespace {

struct BudgetExhausted {};

void check_horizon(std::span<const RobotSpec> robots, Slot horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  for (const auto& r : robots) {
    r.check();
    if (horizon % r.cycle_time() != 0) {
      std::ostringstream msg;
      msg << "horizon " << horizon << " is not a multiple of the cycle time "
          << r.cycle_time() << " of robot '" << r.id << "'";
      throw DomainError(msg.str());
    }
  }
}

// Depth-first offset search on a dense occupancy profile.
class OffsetPacker {
 public:
  OffsetPacker(std::span<const RobotSpec> robots, std::int64_t m, Slot horizon,
               std::uint64_t& nodes, std::uint64_t budget)
      : robots_(robots),
        m_(m),
        horizon_(horizon),
        nodes_(nodes),
        budget_(budget),
        occupancy_(static_cast<std::size_t>(horizon), 0),
        offsets_(robots.size(), 0) {
    order_.resize(robots.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Decreasing density c/T; equal robots end up adjacent.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& ra = robots_[a];
      const auto& rb = robots_[b];
      const auto lhs = ra.charge_slots * rb.cycle_time();
      const auto rhs = rb.charge_slots * ra.cycle_time();
      if (lhs != rhs) return lhs > rhs;
      if (ra.cycle_time() != rb.cycle_time()) return ra.cycle_time() < rb.cycle_time();
      return false;
    });
  }

  std::optional<std::vector<Slot>> run() {
    if (robots_.empty()) return offsets_;
    if (m_ <= 0) return std::nullopt;
    if (static_cast<std::int64_t>(robots_.size()) <= m_) return offsets_;
    if (!search(0)) return std::nullopt;
    return offsets_;
  }

 private:
  bool same_kind(std::size_t a, std::size_t b) const {
    return robots_[a].charge_slots == robots_[b].charge_slots &&
           robots_[a].fly_slots == robots_[b].fly_slots;
  }

  bool fits(const RobotSpec& r, Slot offset) const {
    const Slot period = r.cycle_time();
    for (Slot k = 0; k < r.charge_slots; ++k) {
      for (Slot t = pos_mod(k - offset, period); t < horizon_; t += period) {
        if (occupancy_[static_cast<std::size_t>(t)] >= m_) return false;
      }
    }
    return true;
  }

  void apply(const RobotSpec& r, Slot offset, std::int32_t delta) {
    const Slot period = r.cycle_time();
    for (Slot k = 0; k < r.charge_slots; ++k) {
      for (Slot t = pos_mod(k - offset, period); t < horizon_; t += period) {
        occupancy_[static_cast<std::size_t>(t)] += delta;
      }
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t idx = order_[depth];
    const RobotSpec& r = robots_[idx];

    // Global time shift: pin the first robot. Interchangeable robots take
    // non-decreasing offsets.
    Slot first = 0;
    Slot last = depth == 0 ? 1 : r.cycle_time();
    if (depth > 0 && same_kind(idx, order_[depth - 1])) {
      first = offsets_[order_[depth - 1]];
    }
    for (Slot s = first; s < last; ++s) {
      if (++nodes_ > budget_) throw BudgetExhausted{};
      if (!fits(r, s)) continue;
      apply(r, s, 1);
      offsets_[idx] = s;
      if (search(depth + 1)) return true;
      apply(r, s, -1);
    }
    return false;
  }

  std::span<const RobotSpec> robots_;
  std::int64_t m_;
  Slot horizon_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::int32_t> occupancy_;
  std::vector<Slot> offsets_;
  std::vector<std::size_t> order_;
};

std::vector<PhaseAssignment> to_phases(std::span<const RobotSpec> robots,
                                       std::span<const Slot> offsets) {
  std::vector<PhaseAssignment> phases;
  phases.reserve(robots.size());
  for (std::size_t i = 0; i < robots.size(); ++i) {
    phases.push_back({robots[i].id, offsets[i]});
  }
  return phases;
}

// Robots linked, transitively, by cycle times sharing a prime factor. Distinct
// groups have coprime horizons, so every combination of their phases occurs
// at some slot and the fleet peak is the sum of the group peaks.
std::vector<std::vector<std::size_t>> coprime_groups(std::span<const RobotSpec> robots) {
  std::vector<std::size_t> parent(robots.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < robots.size(); ++i) {
    for (std::size_t j = i + 1; j < robots.size(); ++j) {
      if (std::gcd(robots[i].cycle_time(), robots[j].cycle_time()) > 1) {
        parent[root(j)] = root(i);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::ptrdiff_t> slot(robots.size(), -1);
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const std::size_t r = root(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return groups;
}

struct GroupFleet {
  std::vector<std::size_t> members;
  std::vector<RobotSpec> robots;
  Slot horizon = 1;
};

std::vector<GroupFleet> split(std::span<const RobotSpec> robots) {
  std::vector<GroupFleet> out;
  for (auto& members : coprime_groups(robots)) {
    GroupFleet g;
    for (auto i : members) {
      g.robots.push_back(robots[i]);
      g.horizon = checked_lcm(g.horizon, robots[i].cycle_time());
    }
    g.members = std::move(members);
    out.push_back(std::move(g));
  }
  return out;
}

// Fewest stations for one group, capped at `cap`; writes the witness into
// `offsets` at the group's member positions.
std::optional<std::int64_t> group_minimum(const GroupFleet& g, std::int64_t cap,
                                          std::vector<Slot>& offsets, std::uint64_t& nodes,
                                          std::uint64_t budget, std::int64_t& trying) {
  const auto size = static_cast<std::int64_t>(g.robots.size());
  for (trying = density_lower_bound(g.robots); trying <= std::min(cap, size); ++trying) {
    if (auto found = OffsetPacker(g.robots, trying, g.horizon, nodes, budget).run()) {
      for (std::size_t k = 0; k < g.members.size(); ++k) offsets[g.members[k]] = (*found)[k];
      return trying;
    }
  }
  return std::nullopt;
}

// Offsets for the whole fleet on m stations, group by group.
std::optional<std::vector<Slot>> pack_grouped(std::span<const RobotSpec> robots, std::int64_t m,
                                              std::uint64_t& nodes, std::uint64_t budget) {
  std::vector<Slot> offsets(robots.size(), 0);
  if (robots.empty()) return offsets;
  if (m <= 0) return std::nullopt;
  std::int64_t used = 0;
  std::int64_t trying = 0;
  for (const auto& g : split(robots)) {
    const auto need = group_minimum(g, m - used, offsets, nodes, budget, trying);
    if (!need) return std::nullopt;
    used += *need;
  }
  return offsets;
}

}  // namespace

std::optional<std::vector<Slot>> pack_offsets(std::span<const RobotSpec> robots,
                                              std::int64_t m, Slot horizon,
                                              std::uint64_t& nodes,
                                              std::uint64_t budget) {
  check_horizon(robots, horizon);
  try {
    return pack_grouped(robots, m, nodes, budget);
  } catch (const BudgetExhausted&) {
    throw ResourceLimitError("offset search exceeded the node budget", 0,
                             static_cast<std::int64_t>(robots.size()));
  }
}

MinStationsSolution solve_min_stations(std::span<const RobotSpec> robots,
                                       Slot horizon,
                                       const SolverOptions& options) {
  check_horizon(robots, horizon);
  MinStationsSolution solution;
  solution.horizon = horizon;

  const auto n = static_cast<std::int64_t>(robots.size());
  const std::int64_t lower = density_lower_bound(robots);
  if (horizon > options.max_horizon) {
    std::ostringstream msg;
    msg << "horizon " << horizon << " exceeds the limit of "
        << options.max_horizon << " slots; optimum lies in [" << lower << ", "
        << n << "]";
    throw ResourceLimitError(msg.str(), lower, n);
  }

  const auto groups = split(robots);
  std::vector<Slot> offsets(robots.size(), 0);
  std::int64_t total = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::int64_t trying = 0;
    try {
      const auto size = static_cast<std::int64_t>(groups[gi].robots.size());
      total += *group_minimum(groups[gi], size, offsets, solution.nodes, options.node_budget,
                              trying);
    } catch (const BudgetExhausted&) {
      std::int64_t low = total + trying;
      std::int64_t high = total + static_cast<std::int64_t>(groups[gi].robots.size());
      for (std::size_t rest = gi + 1; rest < groups.size(); ++rest) {
        low += density_lower_bound(groups[rest].robots);
        high += static_cast<std::int64_t>(groups[rest].robots.size());
      }
      low = std::max(low, lower);
      std::ostringstream msg;
      msg << "min-stations search exceeded the node budget of "
          << options.node_budget << "; optimum lies in [" << low << ", " << high
          << "]";
      throw ResourceLimitError(msg.str(), low, high);
    }
  }
  solution.m_min = total;
  solution.phases = to_phases(robots, offsets);
  return solution;
}

MaxFlytimeSolution solve_max_flytime(std::span<const RobotSpec> robots,
                                     std::int64_t m, Slot horizon,
                                     const SolverOptions& options) {
  if (m < 0) throw DomainError("station count must be >= 0");
  check_horizon(robots, horizon);

  const std::size_t n = robots.size();
  std::vector<std::int64_t> value(n);
  for (std::size_t i = 0; i < n; ++i) {
    value[i] = checked_mul(robots[i].fly_slots, horizon / robots[i].cycle_time());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });
  std::vector<std::int64_t> suffix(n + 1, 0);
  for (std::size_t d = n; d-- > 0;) suffix[d] = suffix[d + 1] + value[order[d]];
  if (horizon > options.max_horizon) {
    std::ostringstream msg;
    msg << "horizon " << horizon << " exceeds the limit of "
        << options.max_horizon << " slots";
    throw ResourceLimitError(msg.str(), 0, suffix[0]);
  }

  MaxFlytimeSolution best;
  best.stations = m;
  best.horizon = horizon;
  best.selection.assign(n, false);

  std::vector<std::size_t> chosen;  // indices into robots, selection order
  std::vector<Slot> best_offsets;
  std::uint64_t nodes = 0;
  std::int64_t best_value = 0;

  auto feasible = [&](std::vector<std::size_t> subset) -> std::optional<std::vector<Slot>> {
    std::sort(subset.begin(), subset.end());
    std::vector<RobotSpec> fleet;
    fleet.reserve(subset.size());
    for (auto i : subset) fleet.push_back(robots[i]);
    return pack_grouped(fleet, m, nodes, options.node_budget);
  };

  // Depth-first: include before exclude; bound by value of all remaining.
  // `witness` holds offsets (sorted-index order) for the current selection.
  auto dfs = [&](auto&& self, std::size_t depth, std::int64_t current,
                 const std::vector<Slot>& witness) -> void {
    if (current + suffix[depth] <= best_value) return;
    if (depth == n) {
      best_value = current;
      best.selection.assign(n, false);
      for (auto i : chosen) best.selection[i] = true;
      best_offsets = witness;
      return;
    }
    const std::size_t idx = order[depth];
    chosen.push_back(idx);
    if (auto offsets = feasible(chosen)) {
      self(self, depth + 1, current + value[idx], *offsets);
    }
    chosen.pop_back();
    self(self, depth + 1, current, witness);
  };

  try {
    dfs(dfs, 0, 0, std::vector<Slot>{});
  } catch (const BudgetExhausted&) {
    std::ostringstream msg;
    msg << "max-flytime search exceeded the node budget of "
        << options.node_budget << "; optimum lies in [" << best_value << ", "
        << suffix[0] << "]";
    throw ResourceLimitError(msg.str(), best_value, suffix[0]);
  }

  best.objective = best_value;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (best.selection[i]) best.phases.push_back({robots[i].id, best_offsets[k++]});
  }
  best.nodes = nodes;
  return best;
}

}  // namespace persched
