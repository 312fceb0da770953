#pragma once

namespace hyperfpp {
inline constexpr const char* kVersion = "1.0.0";
}
