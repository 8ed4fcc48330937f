// SPDX-License-Identifier: MIT
//
// Physical-layer observables of a satellite downlink as seen from a ground
// station: Doppler shift, angle of arrival (elevation/azimuth), received
// signal power, and round-trip time. All four are functions of the same
// trajectory, which is what makes them jointly hard to forge.

#ifndef ORBITAUTH_OBSERVABLES_HPP
#define ORBITAUTH_OBSERVABLES_HPP

#include <cmath>
#include <stdexcept>

#include "orbitauth/constants.hpp"
#include "orbitauth/frames.hpp"
#include "orbitauth/rng.hpp"

namespace orbitauth {

/// Radio link: carrier frequency [Hz] and the transmit-power/antenna-gain
/// product [W] entering the free-space power law.
struct LinkParams {
    double carrier_hz = 2.0e9;
    double tx_power_gain_w = 1.0;
};

/// One slot's worth of observables.
struct FeatureVector {
    double doppler_hz = 0.0;
    double elevation_rad = 0.0;
    double azimuth_rad = 0.0;
    double rsp_w = 0.0;
    double rtt_s = 0.0;
};

/// Doppler shift of the carrier for a target receding at range rate
/// `range_rate` [m/s]: positive while the satellite approaches, sweeping
/// through zero at closest approach.
inline double doppler_shift(double range_rate, const LinkParams& link) {
    return -(link.carrier_hz / kConstants.c) * range_rate;
}

/// Round-trip time over slant range `range` [m].
inline double round_trip_time(double range) {
    return 2.0 * range / kConstants.c;
}

/// Free-space received signal power at slant range `range` [m]:
/// P_t * G * (c / (4 * pi * f_c * r))^2.
inline double received_power(double range, const LinkParams& link) {
    if (!(range > 0.0))
        throw std::domain_error("received_power: range must be positive");
    const double x = kConstants.c / (4.0 * kPi * link.carrier_hz * range);
    return link.tx_power_gain_w * x * x;
}

/// Assemble the full feature vector from a topocentric observation.
inline FeatureVector feature_vector(const TopocentricObservation& obs, const LinkParams& link) {
    FeatureVector f;
    f.doppler_hz = doppler_shift(obs.range_rate, link);
    f.elevation_rad = obs.elevation;
    f.azimuth_rad = obs.azimuth;
    f.rsp_w = received_power(obs.range, link);
    f.rtt_s = round_trip_time(obs.range);
    return f;
}

/// Per-feature measurement noise. Angles, Doppler and delay get additive
/// zero-mean Gaussian noise; received power gets multiplicative log-domain
/// noise (a Gaussian draw in dB applied as a power ratio).
struct NoiseModel {
    double sigma_elevation_rad = deg_to_rad(1.0);
    double sigma_azimuth_rad = deg_to_rad(1.0);
    double sigma_doppler_hz = 200.0;
    double sigma_rsp_db = 1.0;
    double sigma_rtt_s = 100e-9;
};

/// Corrupt a clean feature vector with one noise draw per feature. Draw
/// order is fixed (doppler, elevation, azimuth, rsp, rtt) so a given RNG
/// stream always yields the same measurement.
inline FeatureVector add_noise(const FeatureVector& clean, const NoiseModel& noise,
                               RngStream& rng) {
    FeatureVector out = clean;
    out.doppler_hz += rng.normal(noise.sigma_doppler_hz);
    out.elevation_rad += rng.normal(noise.sigma_elevation_rad);
    out.azimuth_rad += rng.normal(noise.sigma_azimuth_rad);
    out.rsp_w *= std::pow(10.0, rng.normal(noise.sigma_rsp_db) / 10.0);
    out.rtt_s += rng.normal(noise.sigma_rtt_s);
    return out;
}

}  // namespace orbitauth

#endif  // ORBITAUTH_OBSERVABLES_HPP
