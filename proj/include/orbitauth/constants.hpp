// SPDX-License-Identifier: MIT
//
// Physical constants and angle helpers shared across the library.

#ifndef ORBITAUTH_CONSTANTS_HPP
#define ORBITAUTH_CONSTANTS_HPP

#include <cmath>
#include <numbers>

namespace orbitauth {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Earth and signal constants used by every geometric computation.
struct PhysicalConstants {
    double mu;                   // gravitational parameter, m^3/s^2
    double c;                    // speed of light, m/s
    double earth_radius;         // mean Earth radius, m (spherical model)
    double earth_rotation_rate;  // rad/s
};

inline constexpr PhysicalConstants kConstants{
    3.986e14,        // mu
    299'792'458.0,   // c
    6'378'137.0,     // earth_radius
    7.2921159e-5,    // earth_rotation_rate
};

// Linear sidereal model: GMST(t) = 280.4606 deg + 360.9856473 deg/day * d,
// with d in days since the J2000 epoch. Simulation time is seconds since J2000.
inline constexpr double kGmstAtJ2000Deg = 280.4606;
inline constexpr double kSiderealRateDegPerDay = 360.9856473;
inline constexpr double kSecondsPerDay = 86'400.0;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Wrap an angle to [0, 2*pi).
inline double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;  // fmod rounding can land exactly on 2*pi
    return w;
}

/// Wrap an angle (or angle difference) to (-pi, pi].
inline double wrap_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w <= -kPi) w += kTwoPi;
    if (w > kPi) w -= kTwoPi;
    return w;
}

}  // namespace orbitauth

#endif  // ORBITAUTH_CONSTANTS_HPP
