#include "doctest.h"

#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "persched/errors.hpp"
#include "persched/horizon.hpp"
#include "persched/lp_export.hpp"
#include "persched/state.hpp"
#include "test_support.hpp"

using namespace persched;
using persched::testing::robot;

namespace {

// Rows keyed by label, each holding its (variable, coefficient) terms and the
// trailing "sense rhs" text.
struct ParsedModel {
  std::map<std::string, std::vector<std::pair<std::string, long>>> rows;
  std::map<std::string, std::string> senses;
  std::set<std::string> binaries;
  std::set<std::string> generals;
  bool has_bounds = false;
  bool has_end = false;
};

ParsedModel parse(const std::string& text) {
  ParsedModel model;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::string current;
  std::vector<std::string> tokens;

  auto flush_row = [&] {
    if (current.empty()) return;
    auto& terms = model.rows[current];
    long sign = 1;
    long coef = 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      if (tok == "+") continue;
      if (tok == "-") {
        sign = -1;
        continue;
      }
      if (tok == "<=" || tok == "=" || tok == ">=") {
        model.senses[current] = tok + " " + tokens.at(i + 1);
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coef = std::stol(tok);
        continue;
      }
      terms.emplace_back(tok, sign * coef);
      sign = 1;
      coef = 1;
    }
    current.clear();
    tokens.clear();
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line[0] != ' ') {
      flush_row();
      section = line;
      if (section == "Bounds") model.has_bounds = true;
      if (section == "End") model.has_end = true;
      continue;
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      if (section == "Binaries") {
        model.binaries.insert(word);
      } else if (section == "Generals") {
        model.generals.insert(word);
      } else if (section == "Subject To" || section == "Minimize" || section == "Maximize") {
        if (word.back() == ':') {
          flush_row();
          current = word.substr(0, word.size() - 1);
        } else {
          tokens.push_back(word);
        }
      }
    }
  }
  flush_row();
  return model;
}

std::size_t count_prefix(const ParsedModel& model, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& [label, terms] : model.rows) n += label.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("min-stations model has one binary per robot offset") {
  const std::vector<RobotSpec> pair{robot("a", 1, 1), robot("b", 1, 1)};
  const auto model = parse(export_model(pair, {ModelKind::kMinStations, 0}, 2));
  CHECK(model.binaries.size() == 4);
  CHECK(model.generals == std::set<std::string>{"m"});
  CHECK(count_prefix(model, "onehot_") == 2);
  CHECK(count_prefix(model, "cap_") == 2);
  CHECK(model.has_bounds);
  CHECK(model.has_end);
  CHECK(model.senses.at("onehot_0") == "= 1");
  CHECK(model.senses.at("cap_1") == "<= 0");

  const std::vector<RobotSpec> three{robot("a", 1, 1), robot("b", 1, 3), robot("c", 1, 3)};
  const auto bigger = parse(export_model(three, {ModelKind::kMinStations, 0}, 4));
  CHECK(bigger.binaries.size() == 10);
  CHECK(count_prefix(bigger, "onehot_") == 3);
  CHECK(count_prefix(bigger, "cap_") == 4);
}

TEST_CASE("max-flytime model adds selection binaries") {
  const std::vector<RobotSpec> three{robot("a", 1, 1), robot("b", 1, 3), robot("c", 1, 3)};
  const auto model = parse(export_model(three, {ModelKind::kMaxFlytime, 1}, 4));
  CHECK(model.binaries.size() == 13);
  CHECK(model.generals.empty());
  CHECK_FALSE(model.has_bounds);
  CHECK(model.senses.at("onehot_2") == "= 0");
  CHECK(model.senses.at("cap_0") == "<= 1");
  // Objective coefficients are f_i * (T / T_i).
  const auto& obj = model.rows.at("obj");
  REQUIRE(obj.size() == 3);
  CHECK(obj[0] == std::pair<std::string, long>{"u_0", 2});
  CHECK(obj[1] == std::pair<std::string, long>{"u_1", 3});
  CHECK(obj[2] == std::pair<std::string, long>{"u_2", 3});
}

TEST_CASE("empty fleet exports a trivial model") {
  const auto text = export_model(std::vector<RobotSpec>{}, {ModelKind::kMinStations, 0}, 1);
  CHECK(text.find("obj: 0") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  CHECK(parse(text).binaries.empty());
}

TEST_CASE("export rejects inconsistent input") {
  const std::vector<RobotSpec> pair{robot("a", 1, 1), robot("b", 1, 2)};
  CHECK_THROWS_AS(export_model(pair, {ModelKind::kMinStations, 0}, 4), DomainError);
  CHECK_THROWS_AS(export_model(pair, {ModelKind::kMaxFlytime, -1}, 6), DomainError);
}

TEST_CASE("capacity rows count exactly the robots charging at each slot") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto fleet = testing::random_fleet(rng, static_cast<int>(testing::uniform(rng, 1, 4)),
                                             1, 4, 1, 5);
    const Slot horizon = fleet_horizon(fleet);
    const auto model = parse(export_model(fleet, {ModelKind::kMinStations, 0}, horizon));
    std::vector<PhaseAssignment> phases;
    std::set<std::string> active;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      const Slot s = testing::uniform(rng, 0, fleet[i].cycle_time() - 1);
      phases.push_back({fleet[i].id, s});
      active.insert("x_" + std::to_string(i) + "_" + std::to_string(s));
    }
    const auto profile = occupancy_profile(fleet, phases, horizon);
    for (Slot t = 0; t < horizon; ++t) {
      long lhs = 0;
      for (const auto& [var, coef] : model.rows.at("cap_" + std::to_string(t))) {
        if (active.count(var)) lhs += coef;
      }
      CHECK(lhs == profile.counts[static_cast<std::size_t>(t)]);
    }
  }
}

TEST_CASE("export is deterministic") {
  const std::vector<RobotSpec> fleet{robot("a", 2, 3), robot("b", 1, 4)};
  CHECK(export_model(fleet, {ModelKind::kMaxFlytime, 1}, 5) ==
        export_model(fleet, {ModelKind::kMaxFlytime, 1}, 5));
}
