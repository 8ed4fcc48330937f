// SPDX-License-Identifier: MIT
//
// Reference-frame transforms: ECI <-> ECEF via a linear sidereal-angle
// model, geodetic ground-station placement on a spherical Earth, and the
// topocentric (east-north-up) view of a satellite from a station.

#ifndef ORBITAUTH_FRAMES_HPP
#define ORBITAUTH_FRAMES_HPP

#include <cmath>

#include "orbitauth/constants.hpp"
#include "orbitauth/orbit.hpp"
#include "orbitauth/vec.hpp"

namespace orbitauth {

/// Greenwich mean sidereal time [rad] at `time` (seconds since J2000),
/// from the linear model 280.4606 deg + 360.9856473 deg/day.
inline double gmst(double time) {
    const double days = time / kSecondsPerDay;
    const double deg = kGmstAtJ2000Deg + kSiderealRateDegPerDay * days;
    return wrap_two_pi(deg_to_rad(deg));
}

/// Earth-fixed state: position [m] and velocity [m/s] in ECEF at `time`.
struct EcefState {
    Vec3 position;
    Vec3 velocity;
    double time = 0.0;
};

/// Rotate an inertial state into the rotating Earth-fixed frame. The
/// velocity picks up the transport term -omega x r.
inline EcefState eci_to_ecef(const EciState& state) {
    const Mat3 rot = rotation_z(-gmst(state.time));
    const Vec3 r = rot * state.position;
    const Vec3 omega{0.0, 0.0, kConstants.earth_rotation_rate};
    const Vec3 v = rot * state.velocity - cross(omega, r);
    return {r, v, state.time};
}

/// Inverse of eci_to_ecef.
inline EciState ecef_to_eci(const EcefState& state) {
    const Mat3 rot = rotation_z(gmst(state.time));
    const Vec3 omega{0.0, 0.0, kConstants.earth_rotation_rate};
    const Vec3 r = rot * state.position;
    const Vec3 v = rot * (state.velocity + cross(omega, state.position));
    return {r, v, state.time};
}

/// Ground station on the spherical Earth. Angles in radians, altitude in
/// meters above the reference sphere.
struct GroundStation {
    double latitude = 0.0;
    double longitude = 0.0;
    double altitude = 0.0;
};

/// Station position in ECEF (fixed; stations do not move in this frame).
inline Vec3 ground_station_ecef(const GroundStation& gs) {
    const double r = kConstants.earth_radius + gs.altitude;
    const double clat = std::cos(gs.latitude), slat = std::sin(gs.latitude);
    const double clon = std::cos(gs.longitude), slon = std::sin(gs.longitude);
    return {r * clat * clon, r * clat * slon, r * slat};
}

/// East-north-up basis vectors at the station, expressed in ECEF.
struct EnuBasis {
    Vec3 east;
    Vec3 north;
    Vec3 up;
};

inline EnuBasis enu_basis(const GroundStation& gs) {
    const double clat = std::cos(gs.latitude), slat = std::sin(gs.latitude);
    const double clon = std::cos(gs.longitude), slon = std::sin(gs.longitude);
    return {
        {-slon, clon, 0.0},
        {-slat * clon, -slat * slon, clat},
        {clat * clon, clat * slon, slat},
    };
}

/// What the station sees: slant range [m], its rate [m/s], elevation above
/// the horizon [rad], and azimuth clockwise from north in [0, 2*pi).
struct TopocentricObservation {
    double range = 0.0;
    double range_rate = 0.0;
    double elevation = 0.0;
    double azimuth = 0.0;
};

/// Topocentric view of an ECEF satellite state from a station. The range
/// rate is the radial component of the ECEF-relative velocity (the station
/// is fixed in ECEF, so the satellite's ECEF velocity is the relative one).
inline TopocentricObservation topocentric(const GroundStation& gs, const EcefState& sat) {
    const Vec3 los = sat.position - ground_station_ecef(gs);
    const double range = norm(los);
    const EnuBasis basis = enu_basis(gs);
    const double e = dot(los, basis.east);
    const double n = dot(los, basis.north);
    const double u = dot(los, basis.up);
    TopocentricObservation obs;
    obs.range = range;
    obs.range_rate = dot(los, sat.velocity) / range;
    obs.elevation = std::asin(u / range);
    double az = std::atan2(e, n);
    if (az < 0.0) az += kTwoPi;
    obs.azimuth = az;
    return obs;
}

/// Convenience: propagate an orbit and observe it from a station.
inline TopocentricObservation observe(const GroundStation& gs, const KeplerianElements& el,
                                      double t) {
    return topocentric(gs, eci_to_ecef(propagate(el, t)));
}

}  // namespace orbitauth

#endif  // ORBITAUTH_FRAMES_HPP
