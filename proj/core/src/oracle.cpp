#include "persched/oracle.hpp"

#include <limits>
#include <vector>

#include "persched/arith.hpp"
#include "persched/errors.hpp"

namespace persched::oracle {
namespace {

std::int64_t tuple_count(std::span<const RobotSpec> robots, std::int64_t cap) {
  std::int64_t count = 1;
  for (const auto& r : robots) {
    count *= r.cycle_time();
    if (count > cap) {
      throw ResourceLimitError("oracle enumeration exceeds cap", 0, 0);
    }
  }
  return count;
}

// Advances `digits` like an odometer with per-position radix; false on wrap.
bool next_tuple(std::vector<Slot>& digits, std::span<const Slot> radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Peak occupancy, stopping early once it reaches `stop_at`.
std::int64_t peak(std::span<const RobotSpec> robots, std::span<const Slot> offsets,
                  Slot horizon, std::int64_t stop_at) {
  std::int64_t best = 0;
  for (Slot t = 0; t < horizon; ++t) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < robots.size(); ++i) {
      const Slot period = robots[i].charge_slots + robots[i].fly_slots;
      if ((offsets[i] + t) % period < robots[i].charge_slots) ++count;
    }
    if (count > best) {
      best = count;
      if (best >= stop_at) return best;
    }
  }
  return best;
}

std::vector<Slot> periods(std::span<const RobotSpec> robots) {
  std::vector<Slot> out;
  for (const auto& r : robots) out.push_back(r.charge_slots + r.fly_slots);
  return out;
}

void check_horizon(std::span<const RobotSpec> robots, Slot horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  for (const auto& r : robots) {
    if (horizon % (r.charge_slots + r.fly_slots) != 0) {
      throw DomainError("horizon is not a common multiple of the cycle times");
    }
  }
}

}  // namespace

std::int64_t brute_min_stations(std::span<const RobotSpec> robots, Slot horizon,
                                std::int64_t cap) {
  check_horizon(robots, horizon);
  if (robots.empty()) return 0;
  tuple_count(robots, cap);
  const auto radix = periods(robots);
  std::vector<Slot> offsets(robots.size(), 0);
  auto best = static_cast<std::int64_t>(robots.size());
  do {
    best = std::min(best, peak(robots, offsets, horizon, best));
  } while (next_tuple(offsets, radix));
  return best;
}

std::int64_t brute_max_flytime(std::span<const RobotSpec> robots, std::int64_t m,
                               Slot horizon, std::int64_t cap) {
  check_horizon(robots, horizon);
  if (robots.size() >= 62) throw ResourceLimitError("oracle enumeration exceeds cap", 0, 0);
  const std::int64_t subsets = std::int64_t{1} << robots.size();
  if (tuple_count(robots, cap) > cap / subsets) {
    throw ResourceLimitError("oracle enumeration exceeds cap", 0, 0);
  }

  std::int64_t best = 0;
  for (std::int64_t mask = 0; mask < subsets; ++mask) {
    std::vector<RobotSpec> chosen;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < robots.size(); ++i) {
      if (mask & (std::int64_t{1} << i)) {
        chosen.push_back(robots[i]);
        value += robots[i].fly_slots * (horizon / (robots[i].charge_slots + robots[i].fly_slots));
      }
    }
    if (value <= best) continue;
    const auto radix = periods(chosen);
    std::vector<Slot> offsets(chosen.size(), 0);
    bool feasible = false;
    do {
      if (peak(chosen, offsets, horizon, m + 1) <= m) {
        feasible = true;
        break;
      }
    } while (next_tuple(offsets, radix));
    if (feasible) best = value;
  }
  return best;
}

std::int64_t brute_min_lcm(std::span<const CandidateSet> sets, std::int64_t cap) {
  std::vector<Slot> radix;
  std::int64_t count = 1;
  for (const auto& s : sets) {
    if (s.candidates.empty()) throw DomainError("empty candidate set");
    radix.push_back(static_cast<Slot>(s.candidates.size()));
    count *= radix.back();
    if (count > cap) throw ResourceLimitError("oracle enumeration exceeds cap", 0, 0);
  }
  std::vector<Slot> choice(sets.size(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t l = 1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      l = checked_lcm(l, sets[i].candidates[static_cast<std::size_t>(choice[i])]);
    }
    best = std::min(best, l);
  } while (next_tuple(choice, radix));
  return best;
}

}  // namespace persched::oracle
