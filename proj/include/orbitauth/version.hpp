// SPDX-License-Identifier: MIT

#ifndef ORBITAUTH_VERSION_HPP
#define ORBITAUTH_VERSION_HPP

namespace orbitauth {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace orbitauth

#endif  // ORBITAUTH_VERSION_HPP
