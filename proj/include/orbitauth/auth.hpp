// SPDX-License-Identifier: MIT
//
// Challenge-response authentication against the CCM. The verifier picks
// challenge slots (consecutive from a start slot, or uniformly at random
// without replacement), measures the prover's observables at those slots,
// and scores the noise-normalized squared residual against the expected
// rows. Under an honest prover the statistic is chi-square with one degree
// of freedom per slot and active feature.

#ifndef ORBITAUTH_AUTH_HPP
#define ORBITAUTH_AUTH_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitauth/observables.hpp"
#include "orbitauth/rng.hpp"

namespace orbitauth {

/// Which observables enter the decision statistic. Round-trip time is kept
/// out of the statistic by default; it feeds the separate causality check.
struct FeatureSet {
    bool doppler = true;
    bool elevation = true;
    bool azimuth = false;
    bool rsp = false;
    bool rtt = false;

    std::size_t count() const {
        return static_cast<std::size_t>(doppler) + static_cast<std::size_t>(elevation) +
               static_cast<std::size_t>(azimuth) + static_cast<std::size_t>(rsp) +
               static_cast<std::size_t>(rtt);
    }
};

enum class PolicyKind { kFixedConsecutive, kUniformRandom };

/// Challenge-slot selection policy. `start_slot` only matters for the
/// fixed-consecutive kind; negative means "let the scenario choose".
struct SamplingPolicy {
    PolicyKind kind = PolicyKind::kUniformRandom;
    long start_slot = -1;
};

/// One challenge: distinct slot indices in ascending order plus a fresh
/// nonce binding the response to this protocol run.
struct Challenge {
    std::vector<std::size_t> slots;
    std::uint64_t nonce = 0;
};

/// Draw a challenge of `n` slots against a matrix of `slot_count` rows.
/// Random selection uses Floyd's algorithm, so exactly `n` index draws are
/// consumed from `rng` regardless of the slot count. A fixed window that
/// would run off the end of the grid is shifted back to fit.
inline Challenge select_timestamps(const SamplingPolicy& policy, std::size_t n,
                                   std::size_t slot_count, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("select_timestamps: challenge must be nonempty");
    if (n > slot_count)
        throw std::invalid_argument("select_timestamps: more slots requested than exist");

    Challenge challenge;
    challenge.nonce = rng.next_u64();
    challenge.slots.reserve(n);

    if (policy.kind == PolicyKind::kFixedConsecutive) {
        std::size_t start =
            policy.start_slot >= 0 ? static_cast<std::size_t>(policy.start_slot) : 0;
        if (start + n > slot_count) start = slot_count - n;
        for (std::size_t k = 0; k < n; ++k) challenge.slots.push_back(start + k);
        return challenge;
    }

    // Floyd's uniform sampling without replacement; result sorted ascending.
    std::vector<bool> taken(slot_count, false);
    for (std::size_t j = slot_count - n; j < slot_count; ++j) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform_below(j + 1));
        const std::size_t pick = taken[r] ? j : r;
        taken[pick] = true;
    }
    for (std::size_t s = 0; s < slot_count; ++s)
        if (taken[s]) challenge.slots.push_back(s);
    return challenge;
}

/// Squared noise-normalized residual of one measured slot against its
/// expected row. Angle residuals are wrapped to (-pi, pi]; received power
/// is compared in dB so its multiplicative noise becomes additive.
inline double slot_statistic(const FeatureVector& measured, const FeatureVector& reference,
                             const NoiseModel& noise, const FeatureSet& features) {
    double stat = 0.0;
    auto add = [&stat](double residual, double sigma) {
        const double z = residual / sigma;
        stat += z * z;
    };
    if (features.doppler) add(measured.doppler_hz - reference.doppler_hz, noise.sigma_doppler_hz);
    if (features.elevation)
        add(wrap_pi(measured.elevation_rad - reference.elevation_rad), noise.sigma_elevation_rad);
    if (features.azimuth)
        add(wrap_pi(measured.azimuth_rad - reference.azimuth_rad), noise.sigma_azimuth_rad);
    if (features.rsp)
        add(10.0 * std::log10(measured.rsp_w / reference.rsp_w), noise.sigma_rsp_db);
    if (features.rtt) add(measured.rtt_s - reference.rtt_s, noise.sigma_rtt_s);
    return stat;
}

/// Decision statistic over a whole challenge: the sum of slot statistics.
inline double test_statistic(const std::vector<FeatureVector>& measured,
                             const std::vector<FeatureVector>& reference,
                             const NoiseModel& noise, const FeatureSet& features) {
    if (measured.size() != reference.size())
        throw std::invalid_argument("test_statistic: measured/reference size mismatch");
    double stat = 0.0;
    for (std::size_t k = 0; k < measured.size(); ++k)
        stat += slot_statistic(measured[k], reference[k], noise, features);
    return stat;
}

/// Degrees of freedom of the null distribution for an n-slot challenge.
inline std::size_t degrees_of_freedom(std::size_t n, const FeatureSet& features) {
    return n * features.count();
}

struct Decision {
    bool accept = false;
    double statistic = 0.0;
    double threshold = 0.0;
};

/// Accept if and only if the statistic does not exceed the threshold.
inline Decision decide(double statistic, double threshold) {
    return {statistic <= threshold, statistic, threshold};
}

}  // namespace orbitauth

#endif  // ORBITAUTH_AUTH_HPP
