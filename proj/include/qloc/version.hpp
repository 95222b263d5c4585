#pragma once

namespace qloc {

inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace qloc
