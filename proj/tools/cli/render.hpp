#pragma once

#include <string>

#include "files.hpp"

namespace persched::cli {

/// One row per robot over one horizon ('C' charging, 'F' flying) and an
/// occupancy footer. Footer digits are 0-9 then a-z; '+' above 35.
/// An empty schedule renders the header line only.
std::string render_gantt_ascii(const ScheduleFile& file);

/// One rect per robot slot, green for charging and red for flying.
std::string render_gantt_svg(const ScheduleFile& file);

}  // namespace persched::cli
