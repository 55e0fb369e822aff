#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "persched/fleet.hpp"

namespace persched {

struct ReplanResult {
  Slot new_offset = 0;    ///< in [0, T_k)
  Slot charge_start = 0;  ///< first slot >= arrival where charging begins
  Slot wait_slots = 0;    ///< charge_start - arrival
};

/// counts[t] = m - (robots other than `exclude` charging at t), over
/// [0, horizon). A phase for `exclude` in `phases` is ignored.
/// Throws DomainError if any entry would be negative.
OccupancyProfile residual_capacity(std::span<const RobotSpec> robots,
                                   std::span<const PhaseAssignment> phases,
                                   const std::string& exclude, std::int64_t m,
                                   Slot horizon);

/// New phase for robot `robot_id` arriving at absolute slot `arrival` that
/// keeps every other phase and the station count unchanged and starts its
/// charge as early as possible (ties: smaller offset). The joint period is
/// the lcm of the cycle times of the phased robots and robot `robot_id`.
ReplanResult replan_delayed(std::span<const RobotSpec> robots,
                            std::span<const PhaseAssignment> phases,
                            std::int64_t m, const std::string& robot_id,
                            Slot arrival);

}  // namespace persched
