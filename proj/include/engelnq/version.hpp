#pragma once

namespace engelnq {

inline constexpr const char *kVersion = "0.1.0";

} // namespace engelnq
