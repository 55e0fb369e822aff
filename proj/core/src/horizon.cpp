#include "persched/horizon.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "persched/arith.hpp"
#include "persched/errors.hpp"

namespace persched {

Slot scheduling_horizon(std::span<const Slot> cycle_times) {
  if (cycle_times.empty()) throw DomainError("no cycle times given");
  Slot result = 1;
  for (Slot t : cycle_times) result = checked_lcm(result, t);
  return result;
}

Slot fleet_horizon(std::span<const RobotSpec> robots) {
  Slot result = 1;
  for (const auto& r : robots) result = checked_lcm(result, r.cycle_time());
  return result;
}

CandidateSet candidate_set(const RobotSpec& robot) {
  robot.check();
  const Slot period = robot.cycle_time();
  const Epsilon& eps = robot.epsilon;
  // ceil((1 - n/d) * T) = ceil((d - n) * T / d)
  const Slot lower_eps =
      ceil_div(checked_mul(eps.den() - eps.num(), period), eps.den());
  const Slot lower = std::max(lower_eps, robot.charge_slots + 1);
  if (lower > period) {
    throw DomainError("robot '" + robot.id + "' has no admissible cycle time");
  }
  CandidateSet set{robot.id, robot.charge_slots, {}};
  for (Slot v = lower; v <= period; ++v) set.candidates.push_back(v);
  return set;
}

HorizonPlan dijkstra_lcm(std::span<const CandidateSet> sets) {
  for (const auto& s : sets) {
    if (s.candidates.empty()) {
      throw DomainError("empty candidate set for robot '" + s.robot_id + "'");
    }
  }

  // Vertex 0 is the source, then each layer's candidates in order, then the
  // target. Both pseudo vertices carry value 1.
  struct Vertex {
    std::size_t layer;
    Slot value;
  };
  std::vector<Vertex> vertices{{0, 1}};
  std::vector<std::size_t> layer_begin{0};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    layer_begin.push_back(vertices.size());
    for (Slot v : sets[i].candidates) vertices.push_back({i + 1, v});
  }
  layer_begin.push_back(vertices.size());
  const std::size_t target = vertices.size();
  vertices.push_back({sets.size() + 1, 1});
  layer_begin.push_back(vertices.size());

  constexpr Slot kInf = std::numeric_limits<Slot>::max();
  const std::size_t count = vertices.size();
  std::vector<Slot> cost(count, kInf);
  std::vector<bool> visited(count, false);
  std::vector<std::ptrdiff_t> predecessor(count, -1);

  using Entry = std::tuple<Slot, std::size_t, Slot, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  cost[0] = 1;
  pq.emplace(1, 0, 1, 0);

  while (!pq.empty()) {
    const auto [min_cost, layer, value, u] = pq.top();
    pq.pop();
    if (visited[u]) continue;

    if (u == target) {
      std::vector<std::size_t> path{u};
      for (auto p = predecessor[u]; p != -1; p = predecessor[static_cast<std::size_t>(p)]) {
        path.push_back(static_cast<std::size_t>(p));
      }
      std::reverse(path.begin(), path.end());

      HorizonPlan plan;
      plan.horizon = min_cost;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        const Vertex& v = vertices[path[k]];
        const CandidateSet& set = sets[v.layer - 1];
        plan.chosen.push_back(v.value);
        plan.new_fly_slots.push_back(v.value - set.charge_slots);
        plan.safety_slots.push_back(set.candidates.back() - v.value);
      }
      return plan;
    }

    visited[u] = true;
    const std::size_t next = vertices[u].layer + 1;
    for (std::size_t v = layer_begin[next]; v < layer_begin[next + 1]; ++v) {
      Slot new_cost = kInf;
      try {
        new_cost = checked_lcm(min_cost, vertices[v].value);
      } catch (const OverflowError&) {
        continue;
      }
      if (new_cost < cost[v]) {
        cost[v] = new_cost;
        pq.emplace(new_cost, vertices[v].layer, vertices[v].value, v);
        predecessor[v] = static_cast<std::ptrdiff_t>(u);
      }
    }
  }
  throw OverflowError("every candidate combination overflows the horizon");
}

HorizonPlan reduce_horizon(std::span<const RobotSpec> robots) {
  std::vector<CandidateSet> sets;
  sets.reserve(robots.size());
  for (const auto& r : robots) sets.push_back(candidate_set(r));
  HorizonPlan plan = dijkstra_lcm(sets);
  Slot original = 0;
  try {
    original = fleet_horizon(robots);
  } catch (const OverflowError&) {
    return plan;
  }
  if (plan.horizon <= original) return plan;

  // The search can settle on a path worse than keeping every cycle time.
  HorizonPlan unchanged;
  unchanged.horizon = original;
  for (const auto& r : robots) {
    unchanged.chosen.push_back(r.cycle_time());
    unchanged.new_fly_slots.push_back(r.fly_slots);
    unchanged.safety_slots.push_back(0);
  }
  return unchanged;
}

std::vector<RobotSpec> apply_plan(std::span<const RobotSpec> robots,
                                  const HorizonPlan& plan) {
  if (plan.new_fly_slots.size() != robots.size()) {
    throw DomainError("horizon plan does not match the fleet size");
  }
  std::vector<RobotSpec> out(robots.begin(), robots.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].fly_slots = plan.new_fly_slots[i];
  }
  return out;
}

}  // namespace persched
