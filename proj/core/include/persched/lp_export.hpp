#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "persched/fleet.hpp"

namespace persched {

enum class ModelKind { kMinStations, kMaxFlytime };

struct ModelRequest {
  ModelKind kind = ModelKind::kMinStations;
  std::int64_t stations = 0;  ///< capacity right-hand side in kMaxFlytime mode
};

/// Writes the 0-1 offset-selection program in CPLEX LP format.
///
/// Variables x_<i>_<s> pick offset s for robot i (input index). Rows:
///   onehot_<i>:  sum_s x_<i>_<s> = 1         (min-stations)
///                sum_s x_<i>_<s> - u_<i> = 0 (max-flytime, u binary)
///   cap_<t>:     sum of x charging at slot t - m <= 0   (min-stations)
///                sum of x charging at slot t <= stations (max-flytime)
/// Min-stations minimises the general integer m; max-flytime maximises
/// sum_i f_i (T / T_i) u_i. Emission order is fixed: robots in input order,
/// offsets ascending, capacity rows by slot. An empty fleet yields objective
/// 0 and no rows.
std::string export_model(std::span<const RobotSpec> robots,
                         const ModelRequest& request, Slot horizon);

}  // namespace persched
