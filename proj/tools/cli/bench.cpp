#include "bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "persched/horizon.hpp"
#include "persched/tpws.hpp"

namespace persched::cli {
namespace {

// Modulo draw on mt19937_64 (fully specified by the standard), unlike the
// implementation-defined std::uniform_int_distribution.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::vector<RobotSpec> generate_instance(BenchMode mode, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RobotSpec> robots;
  for (int i = 0; i < n; ++i) {
    const auto b = draw(rng, 1, 5);
    const auto a = draw(rng, 0, b - 1);
    const Slot c = Slot{1} << a;
    const Slot period = Slot{1} << b;
    robots.push_back({"r" + std::to_string(i), c, period - c, {}});
  }
  if (mode == BenchMode::kPerturbed) {
    std::mt19937_64 noise(seed ^ 0x9e3779b97f4a7c15ULL);
    for (auto& r : robots) {
      const Slot c = std::max<Slot>(1, r.charge_slots + draw(noise, -1, 1));
      const Slot period = std::max(r.cycle_time() + draw(noise, -1, 1), c + 1);
      r.charge_slots = c;
      r.fly_slots = period - c;
    }
  }
  return robots;
}

BenchRow run_bench(BenchMode mode, int n, std::uint64_t seed, const SolverOptions& options) {
  const auto robots = generate_instance(mode, n, seed);
  BenchRow row;
  row.seed = seed;
  row.n = n;
  row.horizon = fleet_horizon(robots);

  auto start = std::chrono::steady_clock::now();
  row.ilp_m = solve_min_stations(robots, row.horizon, options).m_min;
  row.ilp_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  const auto jobs = round_instance(robots);
  row.tpws_m = static_cast<std::int64_t>(schedule_tpws(jobs).machines);
  row.tpws_ms = elapsed_ms(start);
  return row;
}

std::string format_csv(const BenchRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu,%d,%lld,%lld,%lld,%.3f,%.3f",
                static_cast<unsigned long long>(row.seed), row.n,
                static_cast<long long>(row.horizon), static_cast<long long>(row.ilp_m),
                static_cast<long long>(row.tpws_m), row.ilp_ms, row.tpws_ms);
  return buf;
}

}  // namespace persched::cli
