#pragma once

namespace ipsbell {

inline constexpr const char* version = "0.1.0";

} // namespace ipsbell
