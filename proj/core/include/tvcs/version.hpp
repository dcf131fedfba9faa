#pragma once

namespace tvcs {

inline constexpr const char* kVersion = "0.1.0";

} // namespace tvcs
