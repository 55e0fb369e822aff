#include "persched/fleet.hpp"

#include <cmath>
#include <numeric>

#include "persched/errors.hpp"

namespace persched {

Epsilon::Epsilon(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num >= den) {
    throw DomainError("epsilon must lie in [0, 1)");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Epsilon Epsilon::from_double(double value) {
  constexpr std::int64_t kScale = 1'000'000'000;
  if (!std::isfinite(value) || value < 0.0 || value >= 1.0) {
    throw DomainError("epsilon must lie in [0, 1)");
  }
  auto num = static_cast<std::int64_t>(std::llround(value * kScale));
  // A value just below 1 can round up to the scale itself.
  if (num >= kScale) num = kScale - 1;
  return Epsilon(num, kScale);
}

void RobotSpec::check() const {
  if (charge_slots < 1 || fly_slots < 1) {
    throw DomainError("robot '" + id +
                      "': charge_slots and fly_slots must be >= 1");
  }
}

std::int64_t OccupancyProfile::peak() const noexcept {
  std::int64_t best = 0;
  for (auto c : counts) best = std::max(best, c);
  return best;
}

std::int64_t OccupancyProfile::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::optional<std::size_t> find_robot(std::span<const RobotSpec> robots,
                                      const std::string& id) {
  for (std::size_t i = 0; i < robots.size(); ++i) {
    if (robots[i].id == id) return i;
  }
  return std::nullopt;
}

}  // namespace persched
