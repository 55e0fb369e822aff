#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "persched/fleet.hpp"

namespace persched {

/// One-hot cyclic state vector r_i(t). Kept only as a conversion pair with
/// offsets; solvers work on offsets directly.
using OneHot = std::vector<std::uint8_t>;

/// True iff the robot occupies a station at slot t given its offset.
/// Equivalent to p^T A^t e_offset with A the cyclic down-shift permutation.
bool charging_indicator(const RobotSpec& robot, Slot offset, Slot t);

/// Complement of charging_indicator (q^T A^t e_offset).
bool flying_indicator(const RobotSpec& robot, Slot offset, Slot t);

/// Cyclic down-shift: index s moves to (s + 1) mod size.
/// Throws DomainError unless `state` is one-hot.
OneHot advance_state(std::span<const std::uint8_t> state);

OneHot to_one_hot(Slot offset, Slot cycle_time);
/// Throws DomainError unless `state` is one-hot.
Slot offset_of(std::span<const std::uint8_t> state);

/// counts[t] = number of robots charging at t, t in [0, horizon).
/// Robots without a phase contribute nothing.
OccupancyProfile occupancy_profile(std::span<const RobotSpec> robots,
                                   std::span<const PhaseAssignment> phases,
                                   Slot horizon);

struct ValidationReport {
  bool valid = true;
  std::int64_t peak_occupancy = 0;
  std::optional<Slot> first_violation_slot;
  std::string message;
};

/// Checks phase ranges, that the horizon is a common multiple of every
/// deployed cycle time, and that occupancy never exceeds the station count.
/// Violations are reported, never thrown.
ValidationReport validate_schedule(const Schedule& schedule);

/// Sum over selected robots of fly_slots * (horizon / cycle_time).
std::int64_t total_flying(std::span<const RobotSpec> robots,
                          const std::vector<bool>& selection, Slot horizon);

/// Station-count lower bound ceil(sum c_i / T_i), evaluated exactly.
std::int64_t density_lower_bound(std::span<const RobotSpec> robots);

}  // namespace persched
