#include "doctest.h"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include "bench.hpp"
#include "commands.hpp"
#include "files.hpp"
#include "persched/state.hpp"

using namespace persched;
using namespace persched::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kPairFleet = R"({"slot_minutes": 1, "robots": [
  {"id": "a", "charge_slots": 1, "fly_slots": 1, "epsilon": 0},
  {"id": "b", "charge_slots": 1, "fly_slots": 1, "epsilon": 0}]})";

const char* kTrioFleet = R"({"slot_minutes": 1, "robots": [
  {"id": "a", "charge_slots": 1, "fly_slots": 1, "epsilon": 0},
  {"id": "b", "charge_slots": 1, "fly_slots": 1, "epsilon": 0},
  {"id": "c", "charge_slots": 1, "fly_slots": 1, "epsilon": 0}]})";

std::string schedule_json(const std::vector<std::tuple<std::string, Slot, Slot, Slot>>& rows,
                          Slot horizon, std::int64_t stations) {
  Json doc;
  doc["horizon"] = horizon;
  doc["stations"] = stations;
  doc["slot_minutes"] = 1;
  Json list = Json::array();
  for (const auto& [id, c, f, offset] : rows) {
    list.push_back({{"id", id},
                    {"offset", offset},
                    {"cycle", c + f},
                    {"charge_slots", c},
                    {"fly_slots_effective", f},
                    {"safety_slots", 0}});
  }
  doc["assignments"] = list;
  doc["valid"] = true;
  doc["provenance"] = {{"command", "test"}, {"fleet_hash", ""}, {"solver_version", "0"}};
  return doc.dump();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("min-stations emits a valid schedule") {
  const auto r = invoke({"min-stations", "-"}, kPairFleet);
  REQUIRE(r.code == kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["stations"] == 1);
  CHECK(doc["horizon"] == 2);
  CHECK(doc["valid"] == true);
  CHECK(doc["provenance"]["command"] == "min-stations");

  const auto checked = invoke({"validate", "-"}, r.out);
  CHECK(checked.code == kOk);
  CHECK(Json::parse(checked.out)["valid"] == true);
}

TEST_CASE("input errors exit with code 2 and print nothing on stdout") {
  const auto bad = invoke({"min-stations", "-"}, "{not json");
  CHECK(bad.code == kInputError);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  const auto dup = invoke({"min-stations", "-"},
                          R"({"robots": [{"id": "a", "charge_slots": 1, "fly_slots": 1},
                                         {"id": "a", "charge_slots": 1, "fly_slots": 1}]})");
  CHECK(dup.code == kInputError);

  const auto zero = invoke({"min-stations", "-"},
                           R"({"robots": [{"id": "a", "charge_slots": 0, "fly_slots": 1}]})");
  CHECK(zero.code == kInputError);

  const auto eps = invoke({"min-stations", "-"},
                          R"({"robots": [{"id": "a", "charge_slots": 1, "fly_slots": 1, "epsilon": 1.0}]})");
  CHECK(eps.code == kInputError);

  CHECK(invoke({"min-stations", "/nonexistent/fleet.json"}).code == kInputError);
  CHECK(invoke({"no-such-command"}).code == kInputError);
  CHECK(invoke({"max-flytime", "-"}, kPairFleet).code == kInputError);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("resource limits exit with code 3") {
  const auto r = invoke({"min-stations", "-", "--max-horizon", "1"}, kPairFleet);
  CHECK(r.code == kResourceLimit);
  CHECK(r.out.empty());
}

TEST_CASE("max-flytime selects within the station budget") {
  const auto r = invoke({"max-flytime", "-", "--stations", "1"}, kTrioFleet);
  REQUIRE(r.code == kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["objective"] == 2);
  CHECK(doc["selected"].size() == 2);
  CHECK(doc["assignments"].size() == 2);
  CHECK(invoke({"validate", "-"}, r.out).code == kOk);

  const auto none = Json::parse(invoke({"max-flytime", "-", "--stations", "0"}, kTrioFleet).out);
  CHECK(none["objective"] == 0);
  CHECK(none["selected"].empty());

  const auto all = Json::parse(invoke({"max-flytime", "-", "--stations", "2"}, kTrioFleet).out);
  CHECK(all["selected"].size() == 3);
}

TEST_CASE("reduce-horizon with zero epsilon keeps the horizon") {
  const char* fleet = R"({"robots": [
    {"id": "a", "charge_slots": 4, "fly_slots": 6},
    {"id": "b", "charge_slots": 3, "fly_slots": 5}]})";
  const auto plain = Json::parse(invoke({"min-stations", "-"}, fleet).out);
  const auto reduced = Json::parse(invoke({"min-stations", "-", "--reduce-horizon"}, fleet).out);
  CHECK(plain["horizon"] == 40);
  CHECK(reduced["horizon"] == plain["horizon"]);

  const char* loose = R"({"robots": [
    {"id": "a", "charge_slots": 2, "fly_slots": 4, "epsilon": 0.1},
    {"id": "b", "charge_slots": 4, "fly_slots": 6, "epsilon": "1/10"}]})";
  const auto plan = Json::parse(invoke({"reduce-horizon", "-"}, loose).out);
  CHECK(plan["horizon_original"] == 30);
  CHECK(plan["horizon"] == 18);
  CHECK(plan["robots"][1]["safety_slots"] == 1);

  const auto solved = invoke({"min-stations", "-", "--reduce-horizon"}, loose);
  REQUIRE(solved.code == kOk);
  const auto doc = Json::parse(solved.out);
  CHECK(doc["horizon"] == 18);
  CHECK(doc["assignments"][1]["fly_slots_effective"] == 5);
  CHECK(doc["assignments"][1]["safety_slots"] == 1);
  CHECK(invoke({"validate", "-"}, solved.out).code == kOk);
}

TEST_CASE("validate reports an overloaded schedule") {
  const auto text = schedule_json({{"a", 1, 1, 0}, {"b", 1, 1, 0}}, 2, 1);
  const auto r = invoke({"validate", "-"}, text);
  CHECK(r.code == kInvalidSchedule);
  const auto doc = Json::parse(r.out);
  CHECK(doc["valid"] == false);
  CHECK(doc["first_violation_slot"] == 0);
}

TEST_CASE("replan command mirrors the library") {
  const auto text = schedule_json({{"A", 1, 1, 0}, {"B", 1, 1, 1}}, 2, 1);
  const auto r = invoke({"replan", "-", "--robot", "B", "--arrival", "2"}, text);
  REQUIRE(r.code == kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["new_offset"] == 1);
  CHECK(doc["charge_start"] == 3);
  CHECK(doc["wait_slots"] == 1);

  CHECK(invoke({"replan", "-", "--robot", "Z", "--arrival", "2"}, text).code == kInputError);
}

TEST_CASE("gantt renders rows and the occupancy footer") {
  const auto one = invoke({"gantt", "-"}, schedule_json({{"w", 4, 6, 0}}, 10, 1));
  REQUIRE(one.code == kOk);
  const auto one_lines = lines_of(one.out);
  REQUIRE(one_lines.size() == 3);
  CHECK(one_lines[1].substr(one_lines[1].find('|') + 1) == "CCCCFFFFFF");
  CHECK(one_lines[2].substr(one_lines[2].find('|') + 1) == "1111000000");

  const auto two = lines_of(invoke({"gantt", "-"}, schedule_json({{"a", 1, 1, 0}, {"b", 1, 1, 1}}, 2, 1)).out);
  REQUIRE(two.size() == 4);
  CHECK(two[1].substr(two[1].find('|') + 1) == "CF");
  CHECK(two[2].substr(two[2].find('|') + 1) == "FC");
  CHECK(two[3].substr(two[3].find('|') + 1) == "11");

  const auto empty = lines_of(invoke({"gantt", "-"}, schedule_json({}, 1, 0)).out);
  CHECK(empty.size() == 1);

  const auto svg = invoke({"gantt", "-", "--format", "svg"}, schedule_json({{"w", 4, 6, 0}}, 10, 1)).out;
  std::size_t green = 0;
  std::size_t red = 0;
  for (std::size_t p = svg.find("fill=\"green\""); p != std::string::npos; p = svg.find("fill=\"green\"", p + 1)) ++green;
  for (std::size_t p = svg.find("fill=\"red\""); p != std::string::npos; p = svg.find("fill=\"red\"", p + 1)) ++red;
  CHECK(green == 4);
  CHECK(red == 6);
}

TEST_CASE("schedule files round-trip through disk") {
  const auto dir = std::filesystem::temp_directory_path() / "persched_cli_test";
  std::filesystem::create_directories(dir);
  const auto fleet_path = (dir / "fleet.json").string();
  const auto schedule_path = (dir / "schedule.json").string();
  const auto lp_path = (dir / "model.lp").string();
  std::ofstream(fleet_path) << kTrioFleet;

  const auto r = invoke({"min-stations", fleet_path, "--out", schedule_path, "--export-lp", lp_path});
  REQUIRE(r.code == kOk);
  CHECK(r.out.empty());
  CHECK(std::filesystem::file_size(lp_path) > 0);
  CHECK(invoke({"validate", schedule_path}).code == kOk);

  std::ifstream in(schedule_path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto file = parse_schedule(text);
  CHECK(file.stations == 2);
  CHECK(validate_schedule(to_schedule(file)).valid == file.valid);
  CHECK(to_json(file).dump(2) + "\n" == text);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bench output is deterministic apart from timings") {
  auto strip = [](const std::string& csv) {
    std::string out;
    for (const auto& line : lines_of(csv)) {
      std::size_t cut = line.size();
      for (int k = 0; k < 2; ++k) cut = line.rfind(',', cut - 1);
      out += line.substr(0, cut) + "\n";
    }
    return out;
  };
  const std::vector<std::string> args{"bench", "--mode", "perturbed", "--robots", "5",
                                      "--seed", "9", "--count", "3"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  REQUIRE(first.code == kOk);
  CHECK(lines_of(first.out).size() == 4);
  CHECK(lines_of(first.out)[0] == kBenchHeader);
  CHECK(strip(first.out) == strip(second.out));

  CHECK(generate_instance(BenchMode::kPow2, 6, 3).size() == 6);
  for (const auto& r : generate_instance(BenchMode::kPow2, 8, 4)) {
    CHECK(std::has_single_bit(static_cast<std::uint64_t>(r.charge_slots)));
    CHECK(std::has_single_bit(static_cast<std::uint64_t>(r.cycle_time())));
    CHECK(r.cycle_time() <= 32);
  }
}
