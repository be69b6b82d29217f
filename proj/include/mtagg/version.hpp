#ifndef MTAGG_VERSION_HPP_
#define MTAGG_VERSION_HPP_

#include <string_view>

namespace mtagg {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace mtagg

#endif  // MTAGG_VERSION_HPP_
