#include "persched/lp_export.hpp"

#include <sstream>
#include <vector>

#include "persched/arith.hpp"
#include "persched/errors.hpp"

namespace persched {
namespace {

// CPLEX LP caps line length; wrap long sums.
constexpr std::size_t kTermsPerLine = 8;

std::string x_name(std::size_t robot, Slot offset) {
  return "x_" + std::to_string(robot) + "_" + std::to_string(offset);
}

class RowWriter {
 public:
  explicit RowWriter(std::ostringstream& out) : out_(out) {}

  void begin(const std::string& label) {
    out_ << ' ' << label << ':';
    terms_ = 0;
  }

  void term(const std::string& var, std::int64_t coef = 1) {
    if (terms_ > 0 && terms_ % kTermsPerLine == 0) out_ << "\n  ";
    if (coef < 0) {
      out_ << " - ";
      coef = -coef;
    } else if (terms_ > 0) {
      out_ << " + ";
    } else {
      out_ << ' ';
    }
    if (coef != 1) out_ << coef << ' ';
    out_ << var;
    ++terms_;
  }

  void end(const std::string& sense, std::int64_t rhs) {
    out_ << ' ' << sense << ' ' << rhs << '\n';
  }

 private:
  std::ostringstream& out_;
  std::size_t terms_ = 0;
};

}  // namespace

std::string export_model(std::span<const RobotSpec> robots,
                         const ModelRequest& request, Slot horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  for (const auto& r : robots) {
    r.check();
    if (horizon % r.cycle_time() != 0) {
      throw DomainError("horizon is not a multiple of the cycle time of '" +
                        r.id + "'");
    }
  }
  const bool min_mode = request.kind == ModelKind::kMinStations;
  if (!min_mode && request.stations < 0) {
    throw DomainError("station count must be >= 0");
  }

  std::ostringstream out;
  out << "\\ persched offset-selection model ("
      << (min_mode ? "min-stations" : "max-flytime") << ", horizon " << horizon
      << ")\n";
  for (std::size_t i = 0; i < robots.size(); ++i) {
    out << "\\ robot " << i << ": " << robots[i].id << " c=" << robots[i].charge_slots
        << " f=" << robots[i].fly_slots << '\n';
  }

  RowWriter row(out);
  out << (min_mode ? "Minimize\n" : "Maximize\n");
  if (robots.empty()) {
    out << " obj: 0\nSubject To\nEnd\n";
    return out.str();
  }
  row.begin("obj");
  if (min_mode) {
    row.term("m");
  } else {
    for (std::size_t i = 0; i < robots.size(); ++i) {
      const auto value =
          checked_mul(robots[i].fly_slots, horizon / robots[i].cycle_time());
      row.term("u_" + std::to_string(i), value);
    }
  }
  out << '\n';

  out << "Subject To\n";
  for (std::size_t i = 0; i < robots.size(); ++i) {
    row.begin("onehot_" + std::to_string(i));
    for (Slot s = 0; s < robots[i].cycle_time(); ++s) row.term(x_name(i, s));
    if (min_mode) {
      row.end("=", 1);
    } else {
      row.term("u_" + std::to_string(i), -1);
      row.end("=", 0);
    }
  }
  for (Slot t = 0; t < horizon; ++t) {
    row.begin("cap_" + std::to_string(t));
    for (std::size_t i = 0; i < robots.size(); ++i) {
      const Slot period = robots[i].cycle_time();
      for (Slot s = 0; s < period; ++s) {
        if ((s + t % period) % period < robots[i].charge_slots) {
          row.term(x_name(i, s));
        }
      }
    }
    if (min_mode) {
      row.term("m", -1);
      row.end("<=", 0);
    } else {
      row.end("<=", request.stations);
    }
  }

  if (min_mode) {
    out << "Bounds\n 0 <= m <= " << robots.size() << '\n';
  }

  out << "Binaries\n";
  std::size_t on_line = 0;
  auto declare = [&](const std::string& name) {
    out << ' ' << name;
    if (++on_line == kTermsPerLine) {
      out << '\n';
      on_line = 0;
    }
  };
  for (std::size_t i = 0; i < robots.size(); ++i) {
    for (Slot s = 0; s < robots[i].cycle_time(); ++s) declare(x_name(i, s));
  }
  if (!min_mode) {
    for (std::size_t i = 0; i < robots.size(); ++i) {
      declare("u_" + std::to_string(i));
    }
  }
  if (on_line != 0) out << '\n';

  if (min_mode) out << "Generals\n m\n";
  out << "End\n";
  return out.str();
}

}  // namespace persched
