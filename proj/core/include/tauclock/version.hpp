#pragma once

namespace tauclock {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tauclock
