#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "persched/fleet.hpp"

namespace persched {

/// Charging job rounded to powers of two: length = 2^ceil(log2 c),
/// window = 2^floor(log2 T). A job whose rounded length reaches its window
/// is clamped to the window and occupies a whole machine.
struct RoundedJob {
  std::string robot_id;
  Slot length = 1;
  Slot window = 1;
  bool full_machine = false;
};

struct PlacedJob {
  RoundedJob job;
  Slot offset = 0;  ///< multiple of job.length, in [0, job.window)
};

struct MachineAssignment {
  std::size_t machine_index = 0;
  std::string robot_id;
  Slot offset = 0;
};

struct TpwsSchedule {
  std::size_t machines = 0;
  std::vector<MachineAssignment> assignments;  ///< input job order
};

Slot round_up_pow2(Slot value);
Slot round_down_pow2(Slot value);

std::vector<RoundedJob> round_instance(std::span<const RobotSpec> robots);

/// Exact periodic-overlap test for two aligned power-of-two jobs.
/// Throws DomainError on misaligned or out-of-window offsets.
bool conflict(const PlacedJob& a, const PlacedJob& b);

/// First-fit aligned packing: jobs sorted by increasing window then
/// decreasing length; each machine tries offsets 0, len, 2 len, ... and
/// takes the first one conflicting with nothing already on it.
TpwsSchedule schedule_tpws(std::span<const RoundedJob> jobs);

}  // namespace persched
