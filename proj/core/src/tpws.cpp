#include "persched/tpws.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "persched/errors.hpp"

namespace persched {
namespace {

void check_placed(const PlacedJob& p) {
  const auto& j = p.job;
  if (j.length < 1 || j.window < 1 || !std::has_single_bit(static_cast<std::uint64_t>(j.length)) ||
      !std::has_single_bit(static_cast<std::uint64_t>(j.window))) {
    throw DomainError("job '" + j.robot_id + "' is not a power-of-two job");
  }
  if (p.offset < 0 || p.offset >= j.window || p.offset % j.length != 0) {
    throw DomainError("offset of job '" + j.robot_id + "' is not aligned");
  }
}

}  // namespace

Slot round_up_pow2(Slot value) {
  if (value < 1) throw DomainError("cannot round a non-positive value");
  return static_cast<Slot>(std::bit_ceil(static_cast<std::uint64_t>(value)));
}

Slot round_down_pow2(Slot value) {
  if (value < 1) throw DomainError("cannot round a non-positive value");
  return static_cast<Slot>(std::bit_floor(static_cast<std::uint64_t>(value)));
}

std::vector<RoundedJob> round_instance(std::span<const RobotSpec> robots) {
  std::vector<RoundedJob> jobs;
  jobs.reserve(robots.size());
  for (const auto& r : robots) {
    RoundedJob job{r.id, round_up_pow2(r.charge_slots), round_down_pow2(r.cycle_time()), false};
    if (job.length >= job.window) {
      job.length = job.window;
      job.full_machine = true;
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

bool conflict(const PlacedJob& a, const PlacedJob& b) {
  check_placed(a);
  check_placed(b);
  const Slot w = std::min(a.job.window, b.job.window);
  const Slot start_a = a.offset % w;
  const Slot start_b = b.offset % w;
  return start_a < start_b + b.job.length && start_b < start_a + a.job.length;
}

TpwsSchedule schedule_tpws(std::span<const RoundedJob> jobs) {
  std::vector<std::size_t> order(jobs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (jobs[a].window != jobs[b].window) return jobs[a].window < jobs[b].window;
    return jobs[a].length > jobs[b].length;
  });

  std::vector<std::vector<PlacedJob>> machines;
  TpwsSchedule result;
  result.assignments.resize(jobs.size());

  for (std::size_t idx : order) {
    const RoundedJob& job = jobs[idx];
    bool placed = false;
    for (std::size_t mi = 0; mi < machines.size() && !placed; ++mi) {
      for (Slot offset = 0; offset < job.window; offset += job.length) {
        const PlacedJob candidate{job, offset};
        const bool clash = std::any_of(
            machines[mi].begin(), machines[mi].end(),
            [&](const PlacedJob& other) { return conflict(candidate, other); });
        if (!clash) {
          machines[mi].push_back(candidate);
          result.assignments[idx] = {mi, job.robot_id, offset};
          placed = true;
          break;
        }
      }
    }
    if (!placed) {
      machines.push_back({PlacedJob{job, 0}});
      result.assignments[idx] = {machines.size() - 1, job.robot_id, 0};
    }
  }
  result.machines = machines.size();
  return result;
}

}  // namespace persched
