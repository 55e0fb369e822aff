#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace persched {

using Slot = std::int64_t;

/// Safety-margin fraction kept as an exact rational so that interval bounds
/// such as ceil((1 - eps) * T) never suffer from floating-point rounding.
class Epsilon {
 public:
  constexpr Epsilon() = default;
  /// Throws DomainError unless 0 <= num/den < 1 and den > 0.
  Epsilon(std::int64_t num, std::int64_t den);

  /// Nearest rational with denominator 10^9 (reduced). 0.1 becomes 1/10.
  static Epsilon from_double(double value);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_zero() const noexcept { return num_ == 0; }

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// One robot: charges for `charge_slots`, then flies for `fly_slots`.
struct RobotSpec {
  std::string id;
  Slot charge_slots = 1;
  Slot fly_slots = 1;
  Epsilon epsilon{};

  Slot cycle_time() const noexcept { return charge_slots + fly_slots; }

  /// Throws DomainError when either slot count is below one.
  void check() const;
};

/// Cyclic offset of a robot: the robot is charging at slot t iff
/// (offset + t) mod cycle_time < charge_slots.
struct PhaseAssignment {
  std::string robot_id;
  Slot offset = 0;

  friend bool operator==(const PhaseAssignment&,
                         const PhaseAssignment&) = default;
};

/// A fleet together with one phase per deployed robot, a station budget and
/// the period over which the schedule repeats. Robots without a phase are
/// not deployed.
struct Schedule {
  std::vector<RobotSpec> robots;
  std::vector<PhaseAssignment> phases;
  std::int64_t stations = 0;
  Slot horizon = 1;
};

/// Station usage per slot over [0, horizon).
struct OccupancyProfile {
  std::vector<std::int64_t> counts;

  std::int64_t peak() const noexcept;
  std::int64_t total() const noexcept;
};

/// Index of the robot with `id`, or nullopt.
std::optional<std::size_t> find_robot(std::span<const RobotSpec> robots,
                                      const std::string& id);

}  // namespace persched
