#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "persched/fleet.hpp"
#include "persched/state.hpp"

namespace persched::cli {

using Json = nlohmann::ordered_json;

/// Malformed or schema-invalid fleet/schedule input (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FleetFile {
  double slot_minutes = 1.0;
  std::vector<RobotSpec> robots;
};

struct Assignment {
  std::string id;
  Slot offset = 0;
  Slot cycle = 2;
  Slot charge_slots = 1;
  Slot fly_slots_effective = 1;
  Slot safety_slots = 0;
};

struct Provenance {
  std::string command;
  std::string fleet_hash;
  std::string solver_version;
};

struct ScheduleFile {
  Slot horizon = 1;
  std::int64_t stations = 0;
  double slot_minutes = 1.0;
  std::vector<Assignment> assignments;
  std::optional<std::int64_t> objective;          // max-flytime only
  std::optional<std::vector<std::string>> selected;  // max-flytime only
  bool valid = true;  ///< validate_schedule verdict at emission
  Provenance provenance;
};

/// Parses and checks a fleet document: unique string ids, integer slot
/// counts >= 1, epsilon in [0, 1) as a number or "num/den" string,
/// positive slot_minutes. Throws SchemaError.
FleetFile parse_fleet(const std::string& text);

ScheduleFile parse_schedule(const std::string& text);
Json to_json(const ScheduleFile& file);
Json to_json(const ValidationReport& report);

/// Robots (effective fly slots), phases and station count of a schedule file.
Schedule to_schedule(const ScheduleFile& file);

/// "fnv1a64:<16 hex digits>" over the raw bytes.
std::string content_hash(const std::string& bytes);

}  // namespace persched::cli
