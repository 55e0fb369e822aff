#include "persched/state.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "persched/arith.hpp"
#include "persched/errors.hpp"

namespace persched {
namespace {

void check_offset(const RobotSpec& robot, Slot offset) {
  if (offset < 0 || offset >= robot.cycle_time()) {
    std::ostringstream msg;
    msg << "offset " << offset << " out of range [0, " << robot.cycle_time()
        << ") for robot '" << robot.id << "'";
    throw DomainError(msg.str());
  }
}

Slot one_hot_index(std::span<const std::uint8_t> state) {
  Slot index = -1;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] == 0) continue;
    if (state[i] != 1 || index != -1) {
      throw DomainError("state vector is not one-hot");
    }
    index = static_cast<Slot>(i);
  }
  if (index == -1) throw DomainError("state vector is not one-hot");
  return index;
}

}  // namespace

bool charging_indicator(const RobotSpec& robot, Slot offset, Slot t) {
  check_offset(robot, offset);
  if (t < 0) throw DomainError("slot index must be non-negative");
  return (offset + t % robot.cycle_time()) % robot.cycle_time() <
         robot.charge_slots;
}

bool flying_indicator(const RobotSpec& robot, Slot offset, Slot t) {
  return !charging_indicator(robot, offset, t);
}

OneHot advance_state(std::span<const std::uint8_t> state) {
  const Slot s = one_hot_index(state);
  OneHot next(state.size(), 0);
  next[static_cast<std::size_t>((s + 1) % static_cast<Slot>(state.size()))] =
      1;
  return next;
}

OneHot to_one_hot(Slot offset, Slot cycle_time) {
  if (cycle_time < 1 || offset < 0 || offset >= cycle_time) {
    throw DomainError("offset out of range for one-hot conversion");
  }
  OneHot v(static_cast<std::size_t>(cycle_time), 0);
  v[static_cast<std::size_t>(offset)] = 1;
  return v;
}

Slot offset_of(std::span<const std::uint8_t> state) {
  return one_hot_index(state);
}

OccupancyProfile occupancy_profile(std::span<const RobotSpec> robots,
                                   std::span<const PhaseAssignment> phases,
                                   Slot horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  OccupancyProfile profile;
  profile.counts.assign(static_cast<std::size_t>(horizon), 0);
  std::unordered_set<std::string> seen;
  for (const auto& phase : phases) {
    const auto idx = find_robot(robots, phase.robot_id);
    if (!idx) {
      throw DomainError("phase references unknown robot '" + phase.robot_id +
                        "'");
    }
    if (!seen.insert(phase.robot_id).second) {
      throw DomainError("duplicate phase for robot '" + phase.robot_id + "'");
    }
    const RobotSpec& robot = robots[*idx];
    check_offset(robot, phase.offset);
    const Slot period = robot.cycle_time();
    // Charging slots are t = k - offset (mod period) for k in [0, c).
    for (Slot k = 0; k < robot.charge_slots; ++k) {
      for (Slot t = pos_mod(k - phase.offset, period); t < horizon;
           t += period) {
        ++profile.counts[static_cast<std::size_t>(t)];
      }
    }
  }
  return profile;
}

ValidationReport validate_schedule(const Schedule& schedule) {
  ValidationReport report;
  auto fail = [&](std::string msg, std::optional<Slot> slot = std::nullopt) {
    report.valid = false;
    report.message = std::move(msg);
    report.first_violation_slot = slot;
    return report;
  };

  if (schedule.horizon < 1) return fail("horizon must be >= 1");
  if (schedule.stations < 0) return fail("station count must be >= 0");

  std::unordered_set<std::string> seen;
  for (const auto& phase : schedule.phases) {
    const auto idx = find_robot(schedule.robots, phase.robot_id);
    if (!idx) return fail("phase references unknown robot '" + phase.robot_id + "'");
    if (!seen.insert(phase.robot_id).second) {
      return fail("duplicate phase for robot '" + phase.robot_id + "'");
    }
    const RobotSpec& robot = schedule.robots[*idx];
    if (robot.charge_slots < 1 || robot.fly_slots < 1) {
      return fail("robot '" + robot.id + "' has non-positive slot counts");
    }
    if (phase.offset < 0 || phase.offset >= robot.cycle_time()) {
      return fail("offset of robot '" + robot.id + "' out of range");
    }
    if (schedule.horizon % robot.cycle_time() != 0) {
      std::ostringstream msg;
      msg << "horizon " << schedule.horizon
          << " is not a multiple of the cycle time " << robot.cycle_time()
          << " of robot '" << robot.id << "'";
      return fail(msg.str());
    }
  }

  const auto profile =
      occupancy_profile(schedule.robots, schedule.phases, schedule.horizon);
  report.peak_occupancy = profile.peak();
  for (std::size_t t = 0; t < profile.counts.size(); ++t) {
    if (profile.counts[t] > schedule.stations) {
      std::ostringstream msg;
      msg << "slot " << t << " uses " << profile.counts[t]
          << " stations but only " << schedule.stations << " available";
      return fail(msg.str(), static_cast<Slot>(t));
    }
  }
  return report;
}

std::int64_t total_flying(std::span<const RobotSpec> robots,
                          const std::vector<bool>& selection, Slot horizon) {
  if (selection.size() != robots.size()) {
    throw DomainError("selection length must match the fleet size");
  }
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < robots.size(); ++i) {
    if (!selection[i]) continue;
    const Slot period = robots[i].cycle_time();
    if (horizon % period != 0) {
      throw DomainError("horizon is not a multiple of the cycle time of '" +
                        robots[i].id + "'");
    }
    total = checked_add(total, checked_mul(robots[i].fly_slots, horizon / period));
  }
  return total;
}

std::int64_t density_lower_bound(std::span<const RobotSpec> robots) {
  if (robots.empty()) return 0;
  Slot common = 1;
  for (const auto& r : robots) common = checked_lcm(common, r.cycle_time());
  std::int64_t load = 0;
  for (const auto& r : robots) {
    load = checked_add(load, checked_mul(r.charge_slots, common / r.cycle_time()));
  }
  return ceil_div(load, common);
}

}  // namespace persched
