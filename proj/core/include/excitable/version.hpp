#pragma once

namespace excitable {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace excitable
