#pragma once

namespace symdesign {
inline constexpr const char* kVersion = "0.1.0";
}
