// SPDX-License-Identifier: MIT
//
// Monte Carlo estimation of the detection error probability (DEP). Each
// trial plays one protocol round twice, once with the honest prover and
// once with the attacker, and records the decision statistics. Sweeping
// the accept threshold over the pooled statistics yields the false-alarm
// and missed-detection trade-off; the minimum of their balanced average is
// the scenario's minimum DEP.
//
// Every trial draws from RNG streams derived from (master seed, role,
// trial index), so results are reproducible and independent of how trials
// are distributed over worker threads.

#ifndef ORBITAUTH_DEP_HPP
#define ORBITAUTH_DEP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "orbitauth/scenario.hpp"

namespace orbitauth {

namespace stream_role {
inline constexpr std::uint64_t kLegitChallenge = 1;
inline constexpr std::uint64_t kLegitNoise = 2;
inline constexpr std::uint64_t kAttackChallenge = 3;
inline constexpr std::uint64_t kAttackNoise = 4;
inline constexpr std::uint64_t kPerCountSweep = 5;
}  // namespace stream_role

/// Statistic of one honest protocol round: the prover is the claimed
/// satellite, so measurements are CCM rows plus noise.
inline double legit_trial_statistic(const Scenario& sc, const Challenge& challenge,
                                    RngStream& noise_rng) {
    double stat = 0.0;
    for (std::size_t slot : challenge.slots) {
        const FeatureVector& expected = sc.ccm.rows[slot];
        stat += slot_statistic(add_noise(expected, sc.noise, noise_rng), expected, sc.noise,
                               sc.features);
    }
    return stat;
}

/// Statistic of one attacked round: the attacker transmits from her own
/// trajectory (with any pre-compensation applied) and the station's
/// measurement noise is added on top.
inline double attack_trial_statistic(const Scenario& sc, const Challenge& challenge,
                                     RngStream& noise_rng) {
    double stat = 0.0;
    for (std::size_t slot : challenge.slots) {
        const FeatureVector& expected = sc.ccm.rows[slot];
        const FeatureVector sent =
            trudy_response(sc.trudy_rows[slot], expected, sc.adversary.doppler_precompensation);
        stat += slot_statistic(add_noise(sent, sc.noise, noise_rng), expected, sc.noise,
                               sc.features);
    }
    return stat;
}

/// Per-slot causality verdicts for an attacked round: true where the
/// attacker's round-trip time exceeds the expected one.
inline std::vector<bool> challenge_causality_flags(const Scenario& sc,
                                                   const Challenge& challenge) {
    std::vector<bool> flags;
    flags.reserve(challenge.slots.size());
    for (std::size_t slot : challenge.slots) {
        const FeatureVector& expected = sc.ccm.rows[slot];
        const FeatureVector sent =
            trudy_response(sc.trudy_rows[slot], expected, sc.adversary.doppler_precompensation);
        flags.push_back(causality_violation(sent, expected));
    }
    return flags;
}

/// One point of the threshold sweep.
struct DepPoint {
    double threshold = 0.0;
    double p_fa = 0.0;
    double p_md = 0.0;
};

/// DEP estimate for one challenge size.
struct DepResult {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::vector<DepPoint> curve;
    double min_dep = 0.5;
    double best_threshold = 0.0;
};

namespace detail {

inline void run_trial_range(const Scenario& sc, std::size_t n, std::uint64_t seed,
                            std::size_t begin, std::size_t end, std::vector<double>& legit,
                            std::vector<double>& attack) {
    const std::size_t slot_count = sc.ccm.size();
    for (std::size_t trial = begin; trial < end; ++trial) {
        {
            RngStream challenge_rng =
                RngStream::derive(seed, stream_role::kLegitChallenge, trial);
            const Challenge ch = select_timestamps(sc.policy, n, slot_count, challenge_rng);
            RngStream noise_rng = RngStream::derive(seed, stream_role::kLegitNoise, trial);
            legit[trial] = legit_trial_statistic(sc, ch, noise_rng);
        }
        {
            RngStream challenge_rng =
                RngStream::derive(seed, stream_role::kAttackChallenge, trial);
            const Challenge ch = select_timestamps(sc.policy, n, slot_count, challenge_rng);
            RngStream noise_rng = RngStream::derive(seed, stream_role::kAttackNoise, trial);
            attack[trial] = attack_trial_statistic(sc, ch, noise_rng);
        }
    }
}

}  // namespace detail

/// Sweep the accept threshold over the pooled sorted statistics. The DEP
/// at threshold t is (P[legit > t] + P[attack <= t]) / 2; its minimum over
/// all thresholds (including the degenerate always-reject limit, DEP 0.5)
/// is the attacker's best case against an optimally tuned verifier.
inline DepResult sweep_thresholds(std::vector<double> legit, std::vector<double> attack,
                                  std::size_t n) {
    if (legit.empty() || legit.size() != attack.size())
        throw std::invalid_argument("sweep_thresholds: need equal nonempty samples");
    const auto trials = legit.size();
    std::sort(legit.begin(), legit.end());
    std::sort(attack.begin(), attack.end());

    std::vector<double> pool;
    pool.reserve(2 * trials);
    pool.insert(pool.end(), legit.begin(), legit.end());
    pool.insert(pool.end(), attack.begin(), attack.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    DepResult result;
    result.n = n;
    result.trials = trials;
    result.curve.reserve(pool.size());
    result.min_dep = 0.5;
    result.best_threshold = pool.empty() ? 0.0 : pool.front();
    const double inv = 1.0 / static_cast<double>(trials);
    for (double threshold : pool) {
        DepPoint point;
        point.threshold = threshold;
        point.p_fa = static_cast<double>(
                         legit.end() - std::upper_bound(legit.begin(), legit.end(), threshold)) *
                     inv;
        point.p_md = static_cast<double>(
                         std::upper_bound(attack.begin(), attack.end(), threshold) -
                         attack.begin()) *
                     inv;
        result.curve.push_back(point);
        const double dep = 0.5 * (point.p_fa + point.p_md);
        if (dep < result.min_dep) {
            result.min_dep = dep;
            result.best_threshold = threshold;
        }
    }
    return result;
}

/// Estimate the minimum DEP for challenges of `n` slots using `trials`
/// Monte Carlo rounds per population. `workers` threads split the trial
/// range (0 picks the hardware concurrency); the result is identical for
/// any worker count because every trial derives its own RNG streams.
inline DepResult estimate_dep(const Scenario& sc, std::size_t n, std::size_t trials,
                              std::uint64_t master_seed, std::size_t workers = 0) {
    if (trials == 0) throw std::invalid_argument("estimate_dep: need at least one trial");
    if (n == 0 || n > sc.ccm.size())
        throw std::invalid_argument("estimate_dep: challenge size must lie in [1, slot count]");

    std::vector<double> legit(trials), attack(trials);
    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? hw : 1;
    }
    workers = std::min(workers, trials);

    if (workers <= 1) {
        detail::run_trial_range(sc, n, master_seed, 0, trials, legit, attack);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(begin + chunk, trials);
            if (begin >= end) break;
            pool.emplace_back([&sc, n, master_seed, begin, end, &legit, &attack] {
                detail::run_trial_range(sc, n, master_seed, begin, end, legit, attack);
            });
        }
        for (auto& t : pool) t.join();
    }

    return sweep_thresholds(std::move(legit), std::move(attack), n);
}

/// DEP versus challenge size. Each size gets a seed derived from the
/// master seed and the size itself, so two scenarios swept with the same
/// master seed (say, fixed versus random challenge policies) share their
/// random numbers pairwise: a paired comparison with common random numbers.
inline std::vector<DepResult> dep_versus_n(const Scenario& sc, const std::vector<std::size_t>& ns,
                                           std::size_t trials, std::uint64_t master_seed,
                                           std::size_t workers = 0) {
    std::vector<DepResult> results;
    results.reserve(ns.size());
    for (std::size_t n : ns) {
        const std::uint64_t seed = derive_seed(master_seed, stream_role::kPerCountSweep, n);
        results.push_back(estimate_dep(sc, n, trials, seed, workers));
    }
    return results;
}

}  // namespace orbitauth

#endif  // ORBITAUTH_DEP_HPP
