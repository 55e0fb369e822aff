#include "files.hpp"

#include <charconv>
#include <cstdio>
#include <unordered_set>

#include "persched/errors.hpp"

namespace persched::cli {
namespace {

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& where, std::int64_t min) {
  if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < min) {
    throw SchemaError(where + ": must be >= " + std::to_string(min));
  }
  return x;
}

Epsilon parse_epsilon(const Json& v, const std::string& where) {
  try {
    if (v.is_number()) return Epsilon::from_double(v.get<double>());
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      const auto slash = s.find('/');
      if (slash == std::string::npos) throw SchemaError(where + ": expected \"num/den\"");
      std::int64_t num = 0;
      std::int64_t den = 0;
      const auto* first = s.data();
      const auto r1 = std::from_chars(first, first + slash, num);
      const auto r2 = std::from_chars(first + slash + 1, first + s.size(), den);
      if (r1.ec != std::errc{} || r1.ptr != first + slash || r2.ec != std::errc{} ||
          r2.ptr != first + s.size()) {
        throw SchemaError(where + ": expected \"num/den\"");
      }
      return Epsilon(num, den);
    }
  } catch (const DomainError& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": expected a number or \"num/den\" string");
}

}  // namespace

FleetFile parse_fleet(const std::string& text) {
  const Json doc = parse_json(text, "fleet");
  if (!doc.is_object()) throw SchemaError("fleet: top level must be an object");

  FleetFile fleet;
  if (auto it = doc.find("slot_minutes"); it != doc.end()) {
    if (!it->is_number() || it->get<double>() <= 0.0) {
      throw SchemaError("fleet.slot_minutes: must be a positive number");
    }
    fleet.slot_minutes = it->get<double>();
  }
  const Json& robots = require(doc, "robots", "fleet");
  if (!robots.is_array()) throw SchemaError("fleet.robots: must be an array");

  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const std::string where = "fleet.robots[" + std::to_string(i) + "]";
    const Json& r = robots[i];
    if (!r.is_object()) throw SchemaError(where + ": must be an object");
    const Json& id = require(r, "id", where);
    if (!id.is_string() || id.get<std::string>().empty()) {
      throw SchemaError(where + ".id: must be a non-empty string");
    }
    RobotSpec robot;
    robot.id = id.get<std::string>();
    if (!ids.insert(robot.id).second) {
      throw SchemaError(where + ".id: duplicate id '" + robot.id + "'");
    }
    robot.charge_slots = as_int(require(r, "charge_slots", where), where + ".charge_slots", 1);
    robot.fly_slots = as_int(require(r, "fly_slots", where), where + ".fly_slots", 1);
    if (auto it = r.find("epsilon"); it != r.end()) {
      robot.epsilon = parse_epsilon(*it, where + ".epsilon");
    }
    fleet.robots.push_back(std::move(robot));
  }
  return fleet;
}

ScheduleFile parse_schedule(const std::string& text) {
  const Json doc = parse_json(text, "schedule");
  if (!doc.is_object()) throw SchemaError("schedule: top level must be an object");

  ScheduleFile file;
  file.horizon = as_int(require(doc, "horizon", "schedule"), "schedule.horizon", 1);
  file.stations = as_int(require(doc, "stations", "schedule"), "schedule.stations", 0);
  if (auto it = doc.find("slot_minutes"); it != doc.end() && it->is_number()) {
    file.slot_minutes = it->get<double>();
  }
  const Json& list = require(doc, "assignments", "schedule");
  if (!list.is_array()) throw SchemaError("schedule.assignments: must be an array");
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "schedule.assignments[" + std::to_string(i) + "]";
    const Json& a = list[i];
    if (!a.is_object()) throw SchemaError(where + ": must be an object");
    const Json& id = require(a, "id", where);
    if (!id.is_string()) throw SchemaError(where + ".id: must be a string");
    Assignment as;
    as.id = id.get<std::string>();
    if (!ids.insert(as.id).second) throw SchemaError(where + ".id: duplicate id");
    as.offset = as_int(require(a, "offset", where), where + ".offset", 0);
    as.charge_slots = as_int(require(a, "charge_slots", where), where + ".charge_slots", 1);
    as.fly_slots_effective =
        as_int(require(a, "fly_slots_effective", where), where + ".fly_slots_effective", 1);
    as.cycle = as_int(require(a, "cycle", where), where + ".cycle", 2);
    if (as.cycle != as.charge_slots + as.fly_slots_effective) {
      throw SchemaError(where + ".cycle: must equal charge_slots + fly_slots_effective");
    }
    if (auto it = a.find("safety_slots"); it != a.end()) {
      as.safety_slots = as_int(*it, where + ".safety_slots", 0);
    }
    file.assignments.push_back(std::move(as));
  }
  if (auto it = doc.find("objective"); it != doc.end()) {
    file.objective = as_int(*it, "schedule.objective", 0);
  }
  if (auto it = doc.find("selected"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("schedule.selected: must be an array");
    file.selected = it->get<std::vector<std::string>>();
  }
  if (auto it = doc.find("valid"); it != doc.end() && it->is_boolean()) {
    file.valid = it->get<bool>();
  }
  if (auto it = doc.find("provenance"); it != doc.end() && it->is_object()) {
    file.provenance.command = it->value("command", "");
    file.provenance.fleet_hash = it->value("fleet_hash", "");
    file.provenance.solver_version = it->value("solver_version", "");
  }
  return file;
}

Json to_json(const ScheduleFile& file) {
  Json doc;
  doc["horizon"] = file.horizon;
  doc["stations"] = file.stations;
  doc["slot_minutes"] = file.slot_minutes;
  if (file.objective) doc["objective"] = *file.objective;
  if (file.selected) doc["selected"] = *file.selected;
  Json list = Json::array();
  for (const auto& a : file.assignments) {
    list.push_back({{"id", a.id},
                    {"offset", a.offset},
                    {"cycle", a.cycle},
                    {"charge_slots", a.charge_slots},
                    {"fly_slots_effective", a.fly_slots_effective},
                    {"safety_slots", a.safety_slots}});
  }
  doc["assignments"] = std::move(list);
  doc["valid"] = file.valid;
  doc["provenance"] = {{"command", file.provenance.command},
                       {"fleet_hash", file.provenance.fleet_hash},
                       {"solver_version", file.provenance.solver_version}};
  return doc;
}

Json to_json(const ValidationReport& report) {
  Json doc;
  doc["valid"] = report.valid;
  doc["peak_occupancy"] = report.peak_occupancy;
  doc["first_violation_slot"] =
      report.first_violation_slot ? Json(*report.first_violation_slot) : Json(nullptr);
  doc["message"] = report.message;
  return doc;
}

Schedule to_schedule(const ScheduleFile& file) {
  Schedule s;
  s.horizon = file.horizon;
  s.stations = file.stations;
  for (const auto& a : file.assignments) {
    s.robots.push_back({a.id, a.charge_slots, a.fly_slots_effective, {}});
    s.phases.push_back({a.id, a.offset});
  }
  return s;
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace persched::cli
