#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "persched/fleet.hpp"

namespace persched {

/// Admissible cycle times for one robot when its flying time may be
/// shortened by up to a fraction epsilon of its cycle.
struct CandidateSet {
  std::string robot_id;
  Slot charge_slots = 0;
  /// Ascending, nonempty; the last element is the unshortened cycle time.
  std::vector<Slot> candidates;
};

struct HorizonPlan {
  std::vector<Slot> chosen;         ///< per-robot cycle time
  std::vector<Slot> new_fly_slots;  ///< chosen - charge_slots
  std::vector<Slot> safety_slots;   ///< original cycle - chosen
  Slot horizon = 1;                 ///< lcm(chosen)
};

/// LCM of all cycle times. Throws DomainError on an empty list and
/// OverflowError when the result leaves int64.
Slot scheduling_horizon(std::span<const Slot> cycle_times);

/// Horizon of a fleet; 1 for an empty fleet.
Slot fleet_horizon(std::span<const RobotSpec> robots);

/// All V with max(ceil((1 - eps) T), c + 1) <= V <= T.
CandidateSet candidate_set(const RobotSpec& robot);

/// Label-setting search over the layered candidate graph where a path costs
/// the lcm of its vertex values. Keeps one label per vertex, so the result is
/// not guaranteed to be the minimum lcm over all choices (see
/// brute_min_lcm). Ties pop in (cost, layer, value) order. Edges whose lcm
/// leaves int64 are skipped; OverflowError if no path survives.
HorizonPlan dijkstra_lcm(std::span<const CandidateSet> sets);

/// Candidate sets for every robot, then dijkstra_lcm. Falls back to the
/// unchanged cycle times when the search result exceeds the original lcm.
HorizonPlan reduce_horizon(std::span<const RobotSpec> robots);

/// Fleet with fly_slots replaced by plan.new_fly_slots.
std::vector<RobotSpec> apply_plan(std::span<const RobotSpec> robots,
                                  const HorizonPlan& plan);

}  // namespace persched
