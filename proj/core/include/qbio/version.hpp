#pragma once

namespace qbio {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qbio
