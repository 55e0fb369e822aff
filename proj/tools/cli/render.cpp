#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "persched/state.hpp"

namespace persched::cli {
namespace {

constexpr int kCell = 12;
constexpr int kLabelWidth = 96;

char occupancy_digit(std::int64_t count) {
  if (count < 10) return static_cast<char>('0' + count);
  if (count < 36) return static_cast<char>('a' + (count - 10));
  return '+';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_gantt_ascii(const ScheduleFile& file) {
  std::ostringstream out;
  out << "# horizon=" << file.horizon << " stations=" << file.stations << '\n';
  if (file.assignments.empty()) return out.str();

  const std::string footer_label = "occupancy";
  std::size_t width = footer_label.size();
  for (const auto& a : file.assignments) width = std::max(width, a.id.size());

  const Schedule schedule = to_schedule(file);
  for (std::size_t i = 0; i < schedule.robots.size(); ++i) {
    const auto& robot = schedule.robots[i];
    std::string row;
    row.reserve(static_cast<std::size_t>(file.horizon));
    for (Slot t = 0; t < file.horizon; ++t) {
      row += charging_indicator(robot, schedule.phases[i].offset, t) ? 'C' : 'F';
    }
    out << robot.id << std::string(width - robot.id.size(), ' ') << " |" << row << '\n';
  }
  const auto profile = occupancy_profile(schedule.robots, schedule.phases, file.horizon);
  out << footer_label << std::string(width - footer_label.size(), ' ') << " |";
  for (auto c : profile.counts) out << occupancy_digit(c);
  out << '\n';
  return out.str();
}

std::string render_gantt_svg(const ScheduleFile& file) {
  const Schedule schedule = to_schedule(file);
  const auto rows = static_cast<int>(schedule.robots.size());
  const auto width = kLabelWidth + static_cast<int>(file.horizon) * kCell;
  const auto height = std::max(1, rows) * kCell;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  for (int i = 0; i < rows; ++i) {
    const auto& robot = schedule.robots[static_cast<std::size_t>(i)];
    const int y = i * kCell;
    out << "  <text x=\"0\" y=\"" << y + kCell - 2 << "\" font-size=\"10\">"
        << xml_escape(robot.id) << "</text>\n";
    for (Slot t = 0; t < file.horizon; ++t) {
      const bool charging =
          charging_indicator(robot, schedule.phases[static_cast<std::size_t>(i)].offset, t);
      out << "  <rect x=\"" << kLabelWidth + t * kCell << "\" y=\"" << y
          << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
          << (charging ? "green" : "red") << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace persched::cli
