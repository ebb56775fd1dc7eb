#pragma once

namespace x0eis {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

} // namespace x0eis
