// SPDX-License-Identifier: MIT
//
// CSV emission. All numbers are written with std::to_chars at 17
// significant digits: locale-independent, '.' decimal separator, and
// enough digits to round-trip any double exactly.

#ifndef ORBITAUTH_CSVIO_HPP
#define ORBITAUTH_CSVIO_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "orbitauth/ccm.hpp"
#include "orbitauth/dep.hpp"

namespace orbitauth {

/// Render a double with 17 significant digits, independent of locale.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

}  // namespace detail

/// Threshold-sweep export: one row per swept threshold.
inline void write_dep_csv(const DepResult& result, const std::string& path) {
    std::ofstream out = detail::open_output(path);
    out << "n,threshold,p_fa,p_md\n";
    for (const DepPoint& p : result.curve)
        out << result.n << ',' << format_double(p.threshold) << ',' << format_double(p.p_fa)
            << ',' << format_double(p.p_md) << '\n';
}

/// Summary export: one row per challenge size.
inline void write_summary_csv(const std::vector<DepResult>& results, const std::string& path) {
    std::ofstream out = detail::open_output(path);
    out << "n,min_dep\n";
    for (const DepResult& r : results) out << r.n << ',' << format_double(r.min_dep) << '\n';
}

/// Side-by-side trajectory export over the full CCM grid: the claimed
/// satellite's elevation/Doppler/rtt against the attacker's, one row per
/// slot. Plot-ready data for the trajectory-mismatch figures.
inline void emit_trajectory(const Ccm& ccm, const std::vector<FeatureVector>& trudy_rows,
                            const std::string& path) {
    if (trudy_rows.size() != ccm.size())
        throw std::invalid_argument("emit_trajectory: attacker rows do not match the CCM grid");
    std::ofstream out = detail::open_output(path);
    out << "time_s,alice_elevation_rad,trudy_elevation_rad,alice_doppler_hz,trudy_doppler_hz,"
           "alice_rtt_s,trudy_rtt_s\n";
    for (std::size_t k = 0; k < ccm.size(); ++k) {
        const FeatureVector& a = ccm.rows[k];
        const FeatureVector& t = trudy_rows[k];
        out << format_double(ccm.times[k]) << ',' << format_double(a.elevation_rad) << ','
            << format_double(t.elevation_rad) << ',' << format_double(a.doppler_hz) << ','
            << format_double(t.doppler_hz) << ',' << format_double(a.rtt_s) << ','
            << format_double(t.rtt_s) << '\n';
    }
}

}  // namespace orbitauth

#endif  // ORBITAUTH_CSVIO_HPP
