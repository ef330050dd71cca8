#pragma once

namespace sds {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sds
