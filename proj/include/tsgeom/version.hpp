#ifndef TSGEOM_VERSION_HPP
#define TSGEOM_VERSION_HPP

namespace tsgeom {

inline constexpr const char* kToolName = "tsgeom";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace tsgeom

#endif // TSGEOM_VERSION_HPP
