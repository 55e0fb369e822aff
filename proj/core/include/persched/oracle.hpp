#pragma once

#include <cstdint>
#include <span>

#include "persched/fleet.hpp"
#include "persched/horizon.hpp"

// Exhaustive reference solvers. They share no code with the optimizer or
// horizon search and are meant for tests and small instances only.
namespace persched::oracle {

inline constexpr std::int64_t kDefaultCap = 1'000'000;

/// Minimum over all offset tuples of the peak occupancy over [0, horizon).
/// Throws ResourceLimitError when prod T_i exceeds `cap`.
std::int64_t brute_min_stations(std::span<const RobotSpec> robots, Slot horizon,
                                std::int64_t cap = kDefaultCap);

/// Maximum sum f_i (T / T_i) over subsets and offset tuples that fit on m
/// stations. Throws ResourceLimitError when 2^n prod T_i exceeds `cap`.
std::int64_t brute_max_flytime(std::span<const RobotSpec> robots, std::int64_t m,
                               Slot horizon, std::int64_t cap = kDefaultCap);

/// Minimum lcm over every choice of one candidate per set.
std::int64_t brute_min_lcm(std::span<const CandidateSet> sets,
                           std::int64_t cap = kDefaultCap);

}  // namespace persched::oracle
