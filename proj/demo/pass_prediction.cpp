// SPDX-License-Identifier: MIT
//
// Minimal library example: predict the default scenario's pass and print
// a short table of what the ground station sees.

#include <cstdio>

#include <orbitauth/orbitauth.hpp>

int main() {
    using namespace orbitauth;

    const Scenario sc = materialize(default_scenario());
    const VisibilityWindow& w = sc.ccm.window;
    std::printf("pass: %.2f s .. %.2f s (%zu slots of %.0f s)\n", w.start, w.end, sc.ccm.size(),
                sc.ccm.slot_duration);

    std::printf("%10s %12s %12s %14s %12s\n", "time [s]", "elev [deg]", "azim [deg]",
                "doppler [Hz]", "rtt [ms]");
    for (std::size_t k = 0; k < sc.ccm.size(); k += 60) {
        const FeatureVector& f = sc.ccm.rows[k];
        std::printf("%10.1f %12.3f %12.3f %14.1f %12.4f\n", sc.ccm.times[k],
                    rad_to_deg(f.elevation_rad), rad_to_deg(f.azimuth_rad), f.doppler_hz,
                    f.rtt_s * 1e3);
    }
    return 0;
}
