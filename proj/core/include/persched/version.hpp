#pragma once

namespace persched {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace persched
