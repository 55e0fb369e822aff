#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "persched/fleet.hpp"
#include "persched/optimizer.hpp"

namespace persched::cli {

enum class BenchMode { kPow2, kPerturbed };

/// Seeded instance. pow2: c = 2^a, T = 2^b with 0 <= a < b <= 5.
/// perturbed: the pow2 instance for the same (n, seed) with c and T each
/// moved by -1, 0 or +1 and clamped to c >= 1, T >= c + 1.
/// Pure function of (mode, n, seed).
std::vector<RobotSpec> generate_instance(BenchMode mode, int n, std::uint64_t seed);

struct BenchRow {
  std::uint64_t seed = 0;
  int n = 0;
  Slot horizon = 1;
  std::int64_t ilp_m = 0;
  std::int64_t tpws_m = 0;
  double ilp_ms = 0.0;
  double tpws_ms = 0.0;
};

/// Solves one generated instance with both methods. Propagates
/// ResourceLimitError from the exact solver.
BenchRow run_bench(BenchMode mode, int n, std::uint64_t seed,
                   const SolverOptions& options = {});

inline constexpr const char* kBenchHeader = "seed,n,horizon,ilp_m,tpws_m,ilp_ms,tpws_ms";

std::string format_csv(const BenchRow& row);

}  // namespace persched::cli
