// SPDX-License-Identifier: MIT
//
// Adversary models. The attacker ("Trudy") transmits from her own orbit
// while claiming to be the legitimate satellite ("Alice"). Two placement
// strategies are modeled, parameterized by what the attacker knows:
//
//  - coplanar: Trudy flies in Alice's orbital plane at her own altitude.
//    Requires only public orbit data, so it is available to a blind
//    attacker, but the different orbital rate makes her drift in phase.
//  - collinear: Trudy places herself on the station-to-Alice line of sight
//    at a chosen alignment instant, matching angle of arrival exactly at
//    that instant. Requires full knowledge of the claimed trajectory.
//
// A full-knowledge attacker may additionally pre-compensate her carrier so
// the received Doppler matches the expected value exactly.

#ifndef ORBITAUTH_ADVERSARY_HPP
#define ORBITAUTH_ADVERSARY_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitauth/ccm.hpp"
#include "orbitauth/observables.hpp"

namespace orbitauth {

enum class AdversaryKnowledge { kBlind, kFull };
enum class AdversaryPlacement { kCoplanar, kCollinear };

/// Attack parameters. Altitude is Trudy's orbit altitude above the Earth
/// surface [m]; alignment_time is the instant the collinear construction
/// matches the line of sight; along_track_offset shifts a coplanar orbit's
/// phase [rad].
struct AdversaryConfig {
    AdversaryKnowledge knowledge = AdversaryKnowledge::kBlind;
    AdversaryPlacement placement = AdversaryPlacement::kCoplanar;
    double altitude = 1'200e3;
    double alignment_time = 0.0;
    double along_track_offset = 0.0;
    bool doppler_precompensation = false;
};

/// Materialized attacker: her actual orbit plus transmit-side behavior.
struct AdversaryState {
    KeplerianElements orbit;
    bool doppler_precompensation = false;
};

/// Recover circular orbital elements from an inertial state. The speed is
/// not checked against the circular rate; the caller is expected to pass a
/// state whose velocity has circular magnitude and no radial component.
inline KeplerianElements circular_elements_from_state(const Vec3& position, const Vec3& velocity,
                                                      double epoch) {
    const Vec3 h = cross(position, velocity);
    const double h_norm = norm(h);
    if (h_norm <= 0.0)
        throw std::invalid_argument("circular_elements_from_state: degenerate (radial) state");
    const Vec3 h_hat = h / h_norm;
    const double inclination = std::acos(std::clamp(h_hat.z, -1.0, 1.0));

    Vec3 node{1.0, 0.0, 0.0};
    double raan = 0.0;
    const Vec3 n{-h.y, h.x, 0.0};
    const double n_norm = norm(n);
    if (n_norm > 1e-12 * h_norm) {
        node = n / n_norm;
        raan = wrap_two_pi(std::atan2(node.y, node.x));
    }

    const Vec3 r_hat = normalized(position);
    const double arg_latitude =
        std::atan2(dot(r_hat, cross(h_hat, node)), dot(r_hat, node));

    KeplerianElements el;
    el.semi_major_axis = norm(position);
    el.eccentricity = 0.0;
    el.inclination = inclination;
    el.raan = raan;
    el.arg_perigee = 0.0;
    el.true_anomaly = wrap_two_pi(arg_latitude);
    el.epoch = epoch;
    return el;
}

/// Circular orbit through the station-to-Alice line of sight at
/// `alignment_time`, at geocentric radius R_E + altitude. Trudy's velocity
/// is Alice's inertial velocity projected perpendicular to Trudy's radius
/// and rescaled to the circular rate, so her ground track initially shadows
/// Alice's.
inline KeplerianElements construct_collinear_orbit(const GroundStation& gs,
                                                   const KeplerianElements& alice,
                                                   double alignment_time, double altitude) {
    const double radius = kConstants.earth_radius + altitude;
    const EciState alice_state = propagate(alice, alignment_time);
    const Vec3 gs_eci = rotation_z(gmst(alignment_time)) * ground_station_ecef(gs);

    const Vec3 ray = normalized(alice_state.position - gs_eci);
    const double b = dot(gs_eci, ray);
    const double disc = b * b - (dot(gs_eci, gs_eci) - radius * radius);
    if (disc <= 0.0)
        throw std::invalid_argument(
            "construct_collinear_orbit: line of sight misses the target shell");
    const double s = -b + std::sqrt(disc);
    const Vec3 position = gs_eci + s * ray;

    const Vec3 r_hat = normalized(position);
    const Vec3 v_perp = alice_state.velocity - dot(alice_state.velocity, r_hat) * r_hat;
    const double v_perp_norm = norm(v_perp);
    if (v_perp_norm <= 1e-9)
        throw std::invalid_argument(
            "construct_collinear_orbit: reference velocity is radial at alignment time");
    const Vec3 velocity = (circular_speed(radius) / v_perp_norm) * v_perp;

    return circular_elements_from_state(position, velocity, alignment_time);
}

/// Circular orbit in Alice's plane at R_E + altitude, phase-shifted along
/// track by `along_track_offset` [rad].
inline KeplerianElements construct_coplanar_offset_orbit(const KeplerianElements& alice,
                                                         double altitude,
                                                         double along_track_offset) {
    KeplerianElements el = alice;
    el.semi_major_axis = kConstants.earth_radius + altitude;
    el.eccentricity = 0.0;
    el.true_anomaly = wrap_two_pi(alice.arg_perigee + alice.true_anomaly + along_track_offset);
    el.arg_perigee = 0.0;
    return el;
}

/// Build the attacker for a given configuration. Pre-compensation is a
/// full-knowledge capability; requesting it from a blind attacker is a
/// configuration error, as is the collinear placement itself.
inline AdversaryState make_adversary(const AdversaryConfig& cfg, const GroundStation& gs,
                                     const KeplerianElements& alice) {
    if (cfg.knowledge == AdversaryKnowledge::kBlind) {
        if (cfg.placement == AdversaryPlacement::kCollinear)
            throw std::invalid_argument(
                "make_adversary: collinear placement requires full knowledge");
        if (cfg.doppler_precompensation)
            throw std::invalid_argument(
                "make_adversary: doppler pre-compensation requires full knowledge");
    }
    AdversaryState state;
    state.doppler_precompensation = cfg.doppler_precompensation;
    switch (cfg.placement) {
        case AdversaryPlacement::kCollinear:
            state.orbit = construct_collinear_orbit(gs, alice, cfg.alignment_time, cfg.altitude);
            break;
        case AdversaryPlacement::kCoplanar:
            state.orbit =
                construct_coplanar_offset_orbit(alice, cfg.altitude, cfg.along_track_offset);
            break;
    }
    return state;
}

/// Clean observables of the attacker's own trajectory at time t.
inline FeatureVector trudy_feature(const GroundStation& gs, const AdversaryState& trudy, double t,
                                   const LinkParams& link) {
    return feature_vector(topocentric(gs, eci_to_ecef(propagate(trudy.orbit, t))), link);
}

/// Attacker observables precomputed on the CCM slot grid (one row per
/// slot), so repeated challenge evaluation avoids re-propagating.
inline std::vector<FeatureVector> trudy_trajectory(const GroundStation& gs,
                                                   const AdversaryState& trudy, const Ccm& ccm,
                                                   const LinkParams& link) {
    std::vector<FeatureVector> rows;
    rows.reserve(ccm.size());
    for (double t : ccm.times) rows.push_back(trudy_feature(gs, trudy, t, link));
    return rows;
}

/// What the station would measure, before noise, when the attacker answers
/// a challenge at a slot whose expected row is `reference`. Pre-compensated
/// Doppler replaces the attacker's own shift with the expected one.
inline FeatureVector trudy_response(const FeatureVector& trudy_clean,
                                    const FeatureVector& reference, bool doppler_precompensation) {
    FeatureVector out = trudy_clean;
    if (doppler_precompensation) out.doppler_hz = reference.doppler_hz;
    return out;
}

/// True when the response arrives later than the claimed trajectory allows.
/// A transmitter farther from the station than the claimed position cannot
/// avoid the extra light-time, so excess rtt flags a placement beyond the
/// claimed one.
inline bool causality_violation(const FeatureVector& response, const FeatureVector& reference) {
    return response.rtt_s > reference.rtt_s;
}

}  // namespace orbitauth

#endif  // ORBITAUTH_ADVERSARY_HPP
