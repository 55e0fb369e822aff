#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "persched/fleet.hpp"

namespace persched {

struct SolverOptions {
  /// Maximum number of offset placements tried across one solve.
  std::uint64_t node_budget = 50'000'000;
  /// Largest horizon the dense occupancy profile may span.
  Slot max_horizon = 20'000'000;
};

struct MinStationsSolution {
  std::int64_t m_min = 0;
  std::vector<PhaseAssignment> phases;  ///< one per robot, input order
  Slot horizon = 1;
  std::uint64_t nodes = 0;
};

struct MaxFlytimeSolution {
  std::vector<bool> selection;          ///< u_i, input order
  std::vector<PhaseAssignment> phases;  ///< selected robots only, input order
  std::int64_t objective = 0;           ///< total flying slots over [0, horizon)
  std::int64_t stations = 0;
  Slot horizon = 1;
  std::uint64_t nodes = 0;
};

/// Offsets (input order) under which every robot fits on `m` stations, or
/// nullopt if none exist. Robots whose cycle times are linked by common
/// factors are searched together on their own horizon; unlinked groups need
/// their station counts summed. Within a group the search is depth-first over
/// offsets in decreasing-density order with the first robot pinned to 0. Adds the placements it
/// tries to `nodes` and throws ResourceLimitError past `budget`.
std::optional<std::vector<Slot>> pack_offsets(std::span<const RobotSpec> robots,
                                              std::int64_t m, Slot horizon,
                                              std::uint64_t& nodes,
                                              std::uint64_t budget);

/// Minimum station count with a witnessing phase assignment: the sum over
/// groups (see pack_offsets) of the first feasible m counted up from each
/// group's density bound.
/// Throws DomainError if `horizon` is not a common multiple of the cycle
/// times, ResourceLimitError (carrying [lower, upper]) past the node budget.
MinStationsSolution solve_min_stations(std::span<const RobotSpec> robots,
                                       Slot horizon,
                                       const SolverOptions& options = {});

/// Selection of robots maximising total flying time on `m` stations.
/// Branch and bound over the selection (value order), each include checked
/// with pack_offsets. Errors as solve_min_stations.
MaxFlytimeSolution solve_max_flytime(std::span<const RobotSpec> robots,
                                     std::int64_t m, Slot horizon,
                                     const SolverOptions& options = {});

}  // namespace persched
