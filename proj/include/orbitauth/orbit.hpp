// SPDX-License-Identifier: MIT
//
// Two-body Keplerian orbit representation and propagation.
//
// An orbit is the six-element tuple (a, e, i, raan, argp, nu0) anchored at
// an epoch. Propagation advances the mean anomaly at the two-body rate,
// solves Kepler's equation for the eccentric anomaly, builds the state in
// the perifocal frame and rotates it into ECI.

#ifndef ORBITAUTH_ORBIT_HPP
#define ORBITAUTH_ORBIT_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "orbitauth/constants.hpp"
#include "orbitauth/vec.hpp"

namespace orbitauth {

/// Orbit identity: semi-major axis a [m], eccentricity e, inclination i,
/// right ascension of the ascending node, argument of perigee, and true
/// anomaly at the epoch [rad]. Epoch is seconds since J2000.
struct KeplerianElements {
    double semi_major_axis = 0.0;
    double eccentricity = 0.0;
    double inclination = 0.0;
    double raan = 0.0;
    double arg_perigee = 0.0;
    double true_anomaly = 0.0;
    double epoch = 0.0;
};

/// Inertial state: position [m] and velocity [m/s] in ECI at `time`.
struct EciState {
    Vec3 position;
    Vec3 velocity;
    double time = 0.0;
};

inline void validate(const KeplerianElements& el) {
    if (!(el.eccentricity >= 0.0 && el.eccentricity < 1.0))
        throw std::invalid_argument("eccentricity must lie in [0, 1)");
    if (!(el.semi_major_axis * (1.0 - el.eccentricity) > kConstants.earth_radius))
        throw std::invalid_argument("perigee must lie above the Earth surface");
    if (!(el.inclination >= 0.0 && el.inclination <= kPi))
        throw std::invalid_argument("inclination must lie in [0, pi]");
    if (!(el.raan >= 0.0 && el.raan < kTwoPi))
        throw std::invalid_argument("raan must lie in [0, 2*pi)");
    if (!(el.arg_perigee >= 0.0 && el.arg_perigee < kTwoPi))
        throw std::invalid_argument("arg_perigee must lie in [0, 2*pi)");
    if (!(el.true_anomaly >= 0.0 && el.true_anomaly < kTwoPi))
        throw std::invalid_argument("true_anomaly must lie in [0, 2*pi)");
}

/// Circular-orbit speed sqrt(mu/a) for geocentric radius a.
inline double circular_speed(double semi_major_axis) {
    if (!(semi_major_axis > 0.0))
        throw std::domain_error("circular_speed: semi-major axis must be positive");
    return std::sqrt(kConstants.mu / semi_major_axis);
}

/// Orbital period 2*pi*sqrt(a^3/mu).
inline double orbital_period(double semi_major_axis) {
    if (!(semi_major_axis > 0.0))
        throw std::domain_error("orbital_period: semi-major axis must be positive");
    return kTwoPi * std::sqrt(semi_major_axis * semi_major_axis * semi_major_axis / kConstants.mu);
}

/// Mean motion sqrt(mu/a^3) [rad/s].
inline double mean_motion(double semi_major_axis) {
    if (!(semi_major_axis > 0.0))
        throw std::domain_error("mean_motion: semi-major axis must be positive");
    return std::sqrt(kConstants.mu / (semi_major_axis * semi_major_axis * semi_major_axis));
}

inline double eccentric_from_true(double true_anomaly, double e) {
    return 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(true_anomaly / 2.0),
                            std::sqrt(1.0 + e) * std::cos(true_anomaly / 2.0));
}

inline double true_from_eccentric(double eccentric_anomaly, double e) {
    return 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(eccentric_anomaly / 2.0),
                            std::sqrt(1.0 - e) * std::cos(eccentric_anomaly / 2.0));
}

inline double mean_from_eccentric(double eccentric_anomaly, double e) {
    return eccentric_anomaly - e * std::sin(eccentric_anomaly);
}

/// Solve Kepler's equation E - e*sin(E) = M for E by Newton iteration
/// (initial guess M, step tolerance 1e-12 rad, at most 50 iterations).
/// Closed form for circular orbits.
inline double solve_kepler(double mean_anomaly, double e) {
    if (e == 0.0) return mean_anomaly;
    double E = mean_anomaly;
    for (int iter = 0; iter < 50; ++iter) {
        const double f = E - e * std::sin(E) - mean_anomaly;
        const double step = f / (1.0 - e * std::cos(E));
        E -= step;
        if (std::abs(step) < 1e-12) return E;
    }
    throw std::runtime_error("solve_kepler: Newton iteration did not converge in 50 steps");
}

/// Rotation taking perifocal coordinates to ECI: Rz(raan)*Rx(i)*Rz(argp),
/// the z-x'-z'' intrinsic sequence.
inline Mat3 perifocal_to_eci(const KeplerianElements& el) {
    return rotation_z(el.raan) * rotation_x(el.inclination) * rotation_z(el.arg_perigee);
}

/// Propagate the two-body orbit to time t (before or after the epoch).
inline EciState propagate(const KeplerianElements& el, double t) {
    validate(el);
    const double a = el.semi_major_axis;
    const double e = el.eccentricity;
    const double n = mean_motion(a);
    const double mean0 = mean_from_eccentric(eccentric_from_true(el.true_anomaly, e), e);
    const double mean = wrap_pi(mean0 + n * (t - el.epoch));
    const double E = solve_kepler(mean, e);

    const double cos_e = std::cos(E), sin_e = std::sin(E);
    const double beta = std::sqrt(1.0 - e * e);
    const double r = a * (1.0 - e * cos_e);
    const Vec3 pos_pf{a * (cos_e - e), a * beta * sin_e, 0.0};
    const double k = std::sqrt(kConstants.mu * a) / r;
    const Vec3 vel_pf{-k * sin_e, k * beta * cos_e, 0.0};

    const Mat3 rot = perifocal_to_eci(el);
    return {rot * pos_pf, rot * vel_pf, t};
}

}  // namespace orbitauth

#endif  // ORBITAUTH_ORBIT_HPP
