// SPDX-License-Identifier: MIT
//
// Challenge-checking matrix (CCM): the verifier's precomputed table of
// expected observables over one visibility window, sampled on a fixed slot
// grid. Rows are indexed by slot and drive both challenge selection and
// response verification.

#ifndef ORBITAUTH_CCM_HPP
#define ORBITAUTH_CCM_HPP

#include <cmath>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitauth/observables.hpp"

namespace orbitauth {

/// One contiguous interval during which the satellite sits above the
/// station's elevation mask. Boundaries in seconds since J2000.
struct VisibilityWindow {
    double start = 0.0;
    double end = 0.0;
};

namespace detail {

inline double elevation_at(const GroundStation& gs, const KeplerianElements& el, double t) {
    return observe(gs, el, t).elevation;
}

/// Bisect a rise/set crossing bracketed by [lo, hi] down to `tol` seconds.
inline double refine_crossing(const GroundStation& gs, const KeplerianElements& el, double lo,
                              double hi, double mask, double tol) {
    double f_lo = elevation_at(gs, el, lo) - mask;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = elevation_at(gs, el, mid) - mask;
        if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Find every visibility window of `el` from `gs` inside [t_begin, t_end].
/// Coarse 1 s elevation scan, then bisection refines each boundary to
/// 10 ms. Windows clipped by the search interval are reported as-is.
inline std::vector<VisibilityWindow> visibility_windows(const GroundStation& gs,
                                                        const KeplerianElements& el,
                                                        double t_begin, double t_end,
                                                        double mask_elevation) {
    constexpr double kScanStep = 1.0;
    constexpr double kRefineTol = 10e-3;
    if (!(t_end > t_begin))
        throw std::invalid_argument("visibility_windows: interval must have positive length");

    std::vector<VisibilityWindow> windows;
    bool above = detail::elevation_at(gs, el, t_begin) > mask_elevation;
    double rise = above ? t_begin : 0.0;
    double prev = t_begin;
    for (double t = t_begin + kScanStep;; t += kScanStep) {
        const bool clip = t >= t_end;
        if (clip) t = t_end;
        const bool now_above = detail::elevation_at(gs, el, t) > mask_elevation;
        if (now_above != above) {
            const double cross =
                detail::refine_crossing(gs, el, prev, t, mask_elevation, kRefineTol);
            if (now_above) {
                rise = cross;
            } else {
                windows.push_back({rise, cross});
            }
            above = now_above;
        }
        prev = t;
        if (clip) break;
    }
    if (above) windows.push_back({rise, t_end});
    return windows;
}

/// The matrix itself: expected feature vectors on the slot grid
/// t_k = start + k * slot_duration covering one visibility window.
struct Ccm {
    VisibilityWindow window;
    double slot_duration = 1.0;
    std::vector<double> times;
    std::vector<FeatureVector> rows;

    std::size_t size() const { return rows.size(); }

    const FeatureVector& lookup(std::size_t slot) const {
        if (slot >= rows.size()) throw std::out_of_range("Ccm::lookup: slot index out of range");
        return rows[slot];
    }

    /// Slot whose grid time is nearest to t (clamped to the grid).
    std::size_t nearest_slot(double t) const {
        if (rows.empty()) throw std::out_of_range("Ccm::nearest_slot: empty matrix");
        const double k = std::round((t - window.start) / slot_duration);
        if (k <= 0.0) return 0;
        const auto idx = static_cast<std::size_t>(k);
        return idx >= rows.size() ? rows.size() - 1 : idx;
    }
};

/// Build the CCM for one visibility window: M = floor(span / dt) + 1 slots,
/// each holding the clean feature vector of the claimed orbit.
inline Ccm build_ccm(const GroundStation& gs, const KeplerianElements& el,
                     const VisibilityWindow& window, double slot_duration,
                     const LinkParams& link) {
    if (!(slot_duration > 0.0))
        throw std::invalid_argument("build_ccm: slot duration must be positive");
    if (!(window.end >= window.start))
        throw std::invalid_argument("build_ccm: window must have nonnegative length");
    Ccm ccm;
    ccm.window = window;
    ccm.slot_duration = slot_duration;
    const double span = window.end - window.start;
    const auto slots = static_cast<std::size_t>(std::floor(span / slot_duration + 1e-9)) + 1;
    ccm.times.reserve(slots);
    ccm.rows.reserve(slots);
    for (std::size_t k = 0; k < slots; ++k) {
        const double t = window.start + static_cast<double>(k) * slot_duration;
        ccm.times.push_back(t);
        ccm.rows.push_back(feature_vector(topocentric(gs, eci_to_ecef(propagate(el, t))), link));
    }
    return ccm;
}

inline nlohmann::json to_json(const Ccm& ccm) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < ccm.size(); ++k) {
        const FeatureVector& f = ccm.rows[k];
        rows.push_back({
            {"time_s", ccm.times[k]},
            {"doppler_hz", f.doppler_hz},
            {"elevation_rad", f.elevation_rad},
            {"azimuth_rad", f.azimuth_rad},
            {"rsp_w", f.rsp_w},
            {"rtt_s", f.rtt_s},
        });
    }
    return {
        {"window", {{"start_s", ccm.window.start}, {"end_s", ccm.window.end}}},
        {"slot_duration_s", ccm.slot_duration},
        {"rows", rows},
    };
}

inline Ccm ccm_from_json(const nlohmann::json& j) {
    Ccm ccm;
    ccm.window.start = j.at("window").at("start_s").get<double>();
    ccm.window.end = j.at("window").at("end_s").get<double>();
    ccm.slot_duration = j.at("slot_duration_s").get<double>();
    for (const auto& row : j.at("rows")) {
        ccm.times.push_back(row.at("time_s").get<double>());
        FeatureVector f;
        f.doppler_hz = row.at("doppler_hz").get<double>();
        f.elevation_rad = row.at("elevation_rad").get<double>();
        f.azimuth_rad = row.at("azimuth_rad").get<double>();
        f.rsp_w = row.at("rsp_w").get<double>();
        f.rtt_s = row.at("rtt_s").get<double>();
        ccm.rows.push_back(f);
    }
    return ccm;
}

inline void save_ccm(const Ccm& ccm, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_ccm: cannot open " + path);
    out << to_json(ccm).dump(2) << '\n';
}

inline Ccm load_ccm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_ccm: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return ccm_from_json(j);
}

}  // namespace orbitauth

#endif  // ORBITAUTH_CCM_HPP
