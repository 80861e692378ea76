#pragma once

namespace plancherel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace plancherel
