// SPDX-License-Identifier: MIT

#include <cstdio>
#include <filesystem>

#include <catch2/catch_amalgamated.hpp>

#include <orbitauth/ccm.hpp>
#include <orbitauth/scenario.hpp>

using namespace orbitauth;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const GroundStation kStation{deg_to_rad(35.0), deg_to_rad(129.0), 0.0};
constexpr double kMask = deg_to_rad(10.0);

KeplerianElements preset_alice() {
    return zenith_pass_orbit(kStation, 600e3, deg_to_rad(53.0), 0.0);
}

}  // namespace

TEST_CASE("visibility window brackets the culmination and hits the mask", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    const auto windows = visibility_windows(kStation, alice, -2'900.0, 2'900.0, kMask);
    REQUIRE(windows.size() == 1);
    const VisibilityWindow w = windows.front();
    CHECK(w.start < 0.0);
    CHECK(w.end > 0.0);
    CHECK(w.start > -300.0);
    CHECK(w.end < 300.0);
    // boundary elevations sit on the mask to within the 10 ms refinement
    CHECK_THAT(observe(kStation, alice, w.start).elevation, WithinAbs(kMask, deg_to_rad(0.01)));
    CHECK_THAT(observe(kStation, alice, w.end).elevation, WithinAbs(kMask, deg_to_rad(0.01)));
    // just inside/outside the boundary the elevation is above/below the mask
    CHECK(observe(kStation, alice, w.start + 1.0).elevation > kMask);
    CHECK(observe(kStation, alice, w.start - 1.0).elevation < kMask);
}

TEST_CASE("orbit that never rises yields no windows", "[ccm]") {
    KeplerianElements equatorial;
    equatorial.semi_major_axis = kConstants.earth_radius + 600e3;
    const GroundStation high_lat{deg_to_rad(60.0), 0.0, 0.0};
    const auto windows = visibility_windows(high_lat, equatorial, 0.0, 6'000.0, kMask);
    CHECK(windows.empty());
}

TEST_CASE("search interval clipping reports partial windows", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    // start the search mid-pass: the window is clipped at the search start
    const auto windows = visibility_windows(kStation, alice, -100.0, 400.0, kMask);
    REQUIRE(windows.size() == 1);
    CHECK(windows.front().start == -100.0);
    CHECK(windows.front().end < 300.0);
}

TEST_CASE("slot grid covers the window with the fencepost count", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    const auto windows = visibility_windows(kStation, alice, -2'900.0, 2'900.0, kMask);
    REQUIRE(windows.size() == 1);
    const Ccm ccm = build_ccm(kStation, alice, windows.front(), 1.0, LinkParams{});

    CHECK(ccm.size() > 520);
    CHECK(ccm.size() < 545);
    CHECK(ccm.times.size() == ccm.rows.size());
    CHECK(ccm.times.front() == windows.front().start);
    CHECK(ccm.times.back() <= windows.front().end);
    CHECK(ccm.times.back() + ccm.slot_duration > windows.front().end);
    for (std::size_t k = 1; k < ccm.size(); ++k)
        CHECK_THAT(ccm.times[k] - ccm.times[k - 1], WithinRel(1.0, 1e-9));

    // rows are the clean observables of the claimed orbit
    const FeatureVector f = feature_vector(
        topocentric(kStation, eci_to_ecef(propagate(alice, ccm.times[100]))), LinkParams{});
    CHECK(ccm.rows[100].doppler_hz == f.doppler_hz);
    CHECK(ccm.rows[100].elevation_rad == f.elevation_rad);

    // every row is above the mask
    for (const FeatureVector& row : ccm.rows) CHECK(row.elevation_rad > kMask - deg_to_rad(0.01));
}

TEST_CASE("slot lookup and nearest-slot clamping", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    const auto windows = visibility_windows(kStation, alice, -2'900.0, 2'900.0, kMask);
    const Ccm ccm = build_ccm(kStation, alice, windows.front(), 1.0, LinkParams{});

    CHECK(ccm.nearest_slot(ccm.times[7]) == 7);
    CHECK(ccm.nearest_slot(ccm.times[7] + 0.49) == 7);
    CHECK(ccm.nearest_slot(ccm.times[7] + 0.51) == 8);
    CHECK(ccm.nearest_slot(ccm.window.start - 100.0) == 0);
    CHECK(ccm.nearest_slot(ccm.window.end + 100.0) == ccm.size() - 1);
    CHECK_THROWS_AS(ccm.lookup(ccm.size()), std::out_of_range);
    CHECK(&ccm.lookup(3) == &ccm.rows[3]);
}

TEST_CASE("ccm json round trip is exact", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    const auto windows = visibility_windows(kStation, alice, -2'900.0, 2'900.0, kMask);
    const Ccm ccm = build_ccm(kStation, alice, windows.front(), 1.0, LinkParams{});

    SECTION("in-memory round trip") {
        const Ccm back = ccm_from_json(to_json(ccm));
        REQUIRE(back.size() == ccm.size());
        CHECK(back.window.start == ccm.window.start);
        CHECK(back.window.end == ccm.window.end);
        CHECK(back.slot_duration == ccm.slot_duration);
        for (std::size_t k = 0; k < ccm.size(); ++k) {
            CHECK(back.times[k] == ccm.times[k]);
            CHECK(back.rows[k].doppler_hz == ccm.rows[k].doppler_hz);
            CHECK(back.rows[k].elevation_rad == ccm.rows[k].elevation_rad);
            CHECK(back.rows[k].azimuth_rad == ccm.rows[k].azimuth_rad);
            CHECK(back.rows[k].rsp_w == ccm.rows[k].rsp_w);
            CHECK(back.rows[k].rtt_s == ccm.rows[k].rtt_s);
        }
    }
    SECTION("file round trip and row schema") {
        const auto path =
            (std::filesystem::temp_directory_path() / "orbitauth_ccm_test.json").string();
        save_ccm(ccm, path);
        const Ccm back = load_ccm(path);
        CHECK(back.size() == ccm.size());
        CHECK(back.rows.back().rtt_s == ccm.rows.back().rtt_s);

        const nlohmann::json j = to_json(ccm);
        for (const char* key :
             {"time_s", "doppler_hz", "elevation_rad", "azimuth_rad", "rsp_w", "rtt_s"})
            CHECK(j.at("rows").at(0).contains(key));
        std::filesystem::remove(path);
    }
}

TEST_CASE("degenerate build inputs are rejected", "[ccm]") {
    const KeplerianElements alice = preset_alice();
    CHECK_THROWS_AS(build_ccm(kStation, alice, {0.0, 10.0}, 0.0, LinkParams{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_ccm(kStation, alice, {10.0, 0.0}, 1.0, LinkParams{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(visibility_windows(kStation, alice, 10.0, 10.0, kMask),
                    std::invalid_argument);
}
