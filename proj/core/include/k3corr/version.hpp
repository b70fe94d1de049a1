#pragma once

namespace k3corr {

inline constexpr const char* version_string = "0.1.0";

}  // namespace k3corr
