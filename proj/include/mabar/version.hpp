#ifndef MABAR_VERSION_HPP
#define MABAR_VERSION_HPP

namespace mabar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mabar

#endif  // MABAR_VERSION_HPP
