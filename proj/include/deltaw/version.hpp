#pragma once

namespace deltaw {

// Bump whenever the output format or the homology engine changes in a way
// that invalidates cached results.
inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace deltaw
