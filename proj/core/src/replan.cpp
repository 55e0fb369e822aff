#include "persched/replan.hpp"

#include <optional>
#include <sstream>

#include "persched/arith.hpp"
#include "persched/errors.hpp"
#include "persched/state.hpp"

namespace persched {
namespace {

std::vector<PhaseAssignment> without(std::span<const PhaseAssignment> phases,
                                     const std::string& id) {
  std::vector<PhaseAssignment> out;
  for (const auto& p : phases) {
    if (p.robot_id != id) out.push_back(p);
  }
  return out;
}

}  // namespace

OccupancyProfile residual_capacity(std::span<const RobotSpec> robots,
                                   std::span<const PhaseAssignment> phases,
                                   const std::string& exclude, std::int64_t m,
                                   Slot horizon) {
  const auto others = without(phases, exclude);
  OccupancyProfile residual = occupancy_profile(robots, others, horizon);
  for (std::size_t t = 0; t < residual.counts.size(); ++t) {
    residual.counts[t] = m - residual.counts[t];
    if (residual.counts[t] < 0) {
      std::ostringstream msg;
      msg << "prior schedule exceeds " << m << " stations at slot " << t;
      throw DomainError(msg.str());
    }
  }
  return residual;
}

ReplanResult replan_delayed(std::span<const RobotSpec> robots,
                            std::span<const PhaseAssignment> phases,
                            std::int64_t m, const std::string& robot_id,
                            Slot arrival) {
  if (arrival < 0) throw DomainError("arrival slot must be >= 0");
  const auto k = find_robot(robots, robot_id);
  if (!k) throw DomainError("unknown robot '" + robot_id + "'");
  const RobotSpec& robot = robots[*k];
  robot.check();
  const Slot period = robot.cycle_time();

  Slot horizon = period;
  for (const auto& p : phases) {
    const auto idx = find_robot(robots, p.robot_id);
    if (!idx) throw DomainError("phase references unknown robot '" + p.robot_id + "'");
    horizon = checked_lcm(horizon, robots[*idx].cycle_time());
  }
  const OccupancyProfile residual =
      residual_capacity(robots, phases, robot_id, m, horizon);

  std::optional<ReplanResult> best;
  for (Slot s = 0; s < period; ++s) {
    bool ok = true;
    // Robot k charges at t = j - s (mod T_k), j in [0, c_k).
    for (Slot j = 0; j < robot.charge_slots && ok; ++j) {
      for (Slot t = pos_mod(j - s, period); t < horizon; t += period) {
        if (residual.counts[static_cast<std::size_t>(t)] < 1) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    const Slot start = arrival + pos_mod(-(s + arrival), period);
    if (!best || start < best->charge_start) {
      best = ReplanResult{s, start, start - arrival};
    }
  }
  if (!best) {
    throw DomainError("no feasible phase for robot '" + robot_id +
                      "'; the prior schedule is infeasible at this station count");
  }
  return *best;
}

}  // namespace persched
