#pragma once

namespace pinnacle {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace pinnacle
