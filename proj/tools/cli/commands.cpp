#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "files.hpp"
#include "persched/errors.hpp"
#include "persched/horizon.hpp"
#include "persched/lp_export.hpp"
#include "persched/optimizer.hpp"
#include "persched/replan.hpp"
#include "persched/state.hpp"
#include "persched/version.hpp"
#include "render.hpp"

namespace persched::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

struct SolveFlags {
  std::string fleet_path;
  std::string out_path;
  std::string lp_path;
  bool reduce = false;
  std::uint64_t node_budget = SolverOptions{}.node_budget;
  std::int64_t max_horizon = SolverOptions{}.max_horizon;
  std::int64_t stations = -1;
};

// Fleet after the optional horizon reduction, with per-robot safety slots.
struct PreparedFleet {
  FleetFile fleet;
  std::string hash;
  std::vector<RobotSpec> effective;
  std::vector<Slot> safety;
  Slot horizon = 1;
};

PreparedFleet prepare(const SolveFlags& flags, std::istream& in) {
  const std::string text = read_input(flags.fleet_path, in);
  PreparedFleet p;
  p.fleet = parse_fleet(text);
  p.hash = content_hash(text);
  if (flags.reduce && !p.fleet.robots.empty()) {
    const HorizonPlan plan = reduce_horizon(p.fleet.robots);
    p.effective = apply_plan(p.fleet.robots, plan);
    p.safety = plan.safety_slots;
  } else {
    p.effective = p.fleet.robots;
    p.safety.assign(p.effective.size(), 0);
  }
  p.horizon = fleet_horizon(p.effective);
  return p;
}

Assignment make_assignment(const RobotSpec& r, Slot offset, Slot safety) {
  return {r.id, offset, r.cycle_time(), r.charge_slots, r.fly_slots, safety};
}

void finish_schedule(ScheduleFile& file, const SolveFlags& flags, std::ostream& out) {
  file.valid = validate_schedule(to_schedule(file)).valid;
  write_output(flags.out_path, to_json(file).dump(2) + "\n", out);
}

int cmd_min_stations(const SolveFlags& flags, Context& ctx) {
  const PreparedFleet p = prepare(flags, ctx.in);
  const SolverOptions options{flags.node_budget, flags.max_horizon};
  const auto solution = solve_min_stations(p.effective, p.horizon, options);

  if (!flags.lp_path.empty()) {
    write_output(flags.lp_path,
                 export_model(p.effective, {ModelKind::kMinStations, 0}, p.horizon), ctx.out);
  }
  ScheduleFile file;
  file.horizon = p.horizon;
  file.stations = solution.m_min;
  file.slot_minutes = p.fleet.slot_minutes;
  for (std::size_t i = 0; i < p.effective.size(); ++i) {
    file.assignments.push_back(
        make_assignment(p.effective[i], solution.phases[i].offset, p.safety[i]));
  }
  file.provenance = {"min-stations", p.hash, kVersion};
  finish_schedule(file, flags, ctx.out);
  return kOk;
}

int cmd_max_flytime(const SolveFlags& flags, Context& ctx) {
  const PreparedFleet p = prepare(flags, ctx.in);
  const SolverOptions options{flags.node_budget, flags.max_horizon};
  const auto solution = solve_max_flytime(p.effective, flags.stations, p.horizon, options);

  if (!flags.lp_path.empty()) {
    write_output(flags.lp_path,
                 export_model(p.effective, {ModelKind::kMaxFlytime, flags.stations}, p.horizon),
                 ctx.out);
  }
  ScheduleFile file;
  file.horizon = p.horizon;
  file.stations = flags.stations;
  file.slot_minutes = p.fleet.slot_minutes;
  file.objective = solution.objective;
  file.selected.emplace();
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.effective.size(); ++i) {
    if (!solution.selection[i]) continue;
    file.selected->push_back(p.effective[i].id);
    file.assignments.push_back(
        make_assignment(p.effective[i], solution.phases[k++].offset, p.safety[i]));
  }
  file.provenance = {"max-flytime", p.hash, kVersion};
  finish_schedule(file, flags, ctx.out);
  return kOk;
}

int cmd_reduce_horizon(const SolveFlags& flags, Context& ctx) {
  const std::string text = read_input(flags.fleet_path, ctx.in);
  const FleetFile fleet = parse_fleet(text);
  Json doc;
  doc["horizon_original"] = fleet_horizon(fleet.robots);
  const HorizonPlan plan = reduce_horizon(fleet.robots);
  doc["horizon"] = plan.horizon;
  Json robots = Json::array();
  for (std::size_t i = 0; i < fleet.robots.size(); ++i) {
    const auto& r = fleet.robots[i];
    robots.push_back({{"id", r.id},
                      {"charge_slots", r.charge_slots},
                      {"cycle", r.cycle_time()},
                      {"chosen", plan.chosen[i]},
                      {"new_fly_slots", plan.new_fly_slots[i]},
                      {"safety_slots", plan.safety_slots[i]}});
  }
  doc["robots"] = std::move(robots);
  write_output(flags.out_path, doc.dump(2) + "\n", ctx.out);
  return kOk;
}

int cmd_replan(const std::string& path, const std::string& robot, Slot arrival, Context& ctx) {
  const ScheduleFile file = parse_schedule(read_input(path, ctx.in));
  const Schedule schedule = to_schedule(file);
  if (!find_robot(schedule.robots, robot)) {
    throw SchemaError("robot '" + robot + "' is not part of the schedule");
  }
  const auto result =
      replan_delayed(schedule.robots, schedule.phases, schedule.stations, robot, arrival);
  Json doc;
  doc["robot"] = robot;
  doc["arrival"] = arrival;
  doc["new_offset"] = result.new_offset;
  doc["charge_start"] = result.charge_start;
  doc["wait_slots"] = result.wait_slots;
  ctx.out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_validate(const std::string& path, Context& ctx) {
  const ScheduleFile file = parse_schedule(read_input(path, ctx.in));
  const auto report = validate_schedule(to_schedule(file));
  Json doc = to_json(report);
  doc["recorded_valid"] = file.valid;
  ctx.out << doc.dump(2) << '\n';
  return report.valid ? kOk : kInvalidSchedule;
}

int cmd_gantt(const std::string& path, const std::string& format, Context& ctx) {
  const ScheduleFile file = parse_schedule(read_input(path, ctx.in));
  ctx.out << (format == "svg" ? render_gantt_svg(file) : render_gantt_ascii(file));
  return kOk;
}

int cmd_bench(const std::string& mode, int robots, std::uint64_t seed, int count,
              bool header, const SolverOptions& options, Context& ctx) {
  const BenchMode m = mode == "pow2" ? BenchMode::kPow2 : BenchMode::kPerturbed;
  if (header) ctx.out << kBenchHeader << '\n';
  for (int i = 0; i < count; ++i) {
    ctx.out << format_csv(run_bench(m, robots, seed + static_cast<std::uint64_t>(i), options))
            << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Periodic recharge scheduling for robot fleets", "persched"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::function<int()> action;
  SolveFlags flags;

  auto add_solve_flags = [&](CLI::App* sub) {
    sub->add_option("fleet", flags.fleet_path, "Fleet JSON file ('-' for stdin)")->required();
    sub->add_flag("--reduce-horizon", flags.reduce,
                  "Shorten cycle times within each robot's epsilon to shrink the horizon");
    sub->add_option("--out", flags.out_path, "Write the schedule here instead of stdout");
    sub->add_option("--export-lp", flags.lp_path, "Also write the 0-1 model in LP format");
    sub->add_option("--node-budget", flags.node_budget, "Search node limit");
    sub->add_option("--max-horizon", flags.max_horizon, "Largest horizon to search")
        ->check(CLI::PositiveNumber);
  };

  auto* min_cmd = app.add_subcommand("min-stations", "Minimum stations for the whole fleet");
  add_solve_flags(min_cmd);
  min_cmd->callback([&] { action = [&] { return cmd_min_stations(flags, ctx); }; });

  auto* max_cmd = app.add_subcommand("max-flytime", "Maximum flying time on a station budget");
  add_solve_flags(max_cmd);
  max_cmd->add_option("--stations", flags.stations, "Station budget")
      ->required()
      ->check(CLI::NonNegativeNumber);
  max_cmd->callback([&] { action = [&] { return cmd_max_flytime(flags, ctx); }; });

  auto* reduce_cmd = app.add_subcommand("reduce-horizon", "Print the reduced-horizon plan");
  reduce_cmd->add_option("fleet", flags.fleet_path, "Fleet JSON file ('-' for stdin)")
      ->required();
  reduce_cmd->add_option("--out", flags.out_path, "Write here instead of stdout");
  reduce_cmd->callback([&] { action = [&] { return cmd_reduce_horizon(flags, ctx); }; });

  std::string schedule_path;
  std::string robot;
  Slot arrival = 0;
  auto* replan_cmd = app.add_subcommand("replan", "Re-phase a late robot");
  replan_cmd->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  replan_cmd->add_option("--robot", robot, "Id of the late robot")->required();
  replan_cmd->add_option("--arrival", arrival, "Absolute arrival slot")
      ->required()
      ->check(CLI::NonNegativeNumber);
  replan_cmd->callback(
      [&] { action = [&] { return cmd_replan(schedule_path, robot, arrival, ctx); }; });

  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule file");
  validate_cmd->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(schedule_path, ctx); }; });

  std::string format = "ascii";
  auto* gantt_cmd = app.add_subcommand("gantt", "Render a schedule");
  gantt_cmd->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  gantt_cmd->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  gantt_cmd->callback([&] { action = [&] { return cmd_gantt(schedule_path, format, ctx); }; });

  std::string mode = "pow2";
  int bench_robots = 8;
  std::uint64_t seed = 1;
  int count = 1;
  bool no_header = false;
  auto* bench_cmd = app.add_subcommand("bench", "Compare exact search with TPWS");
  bench_cmd->add_option("--mode", mode, "pow2 or perturbed")
      ->check(CLI::IsMember({"pow2", "perturbed"}));
  bench_cmd->add_option("--robots", bench_robots, "Fleet size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "First seed");
  bench_cmd->add_option("--count", count, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-header", no_header, "Omit the CSV header");
  bench_cmd->add_option("--node-budget", flags.node_budget, "Search node limit");
  bench_cmd->add_option("--max-horizon", flags.max_horizon, "Largest horizon to search")
      ->check(CLI::PositiveNumber);
  bench_cmd->callback([&] {
    action = [&] {
      return cmd_bench(mode, bench_robots, seed, count, !no_header,
                       SolverOptions{flags.node_budget, flags.max_horizon}, ctx);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const SchemaError& e) {
    err << "persched: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "persched: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "persched: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceLimitError& e) {
    err << "persched: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OverflowError& e) {
    err << "persched: " << e.what() << '\n';
    return kResourceLimit;
  }
}

}  // namespace persched::cli
