#pragma once

namespace critlab {
inline constexpr const char* kVersion = "1.0.0";
}
