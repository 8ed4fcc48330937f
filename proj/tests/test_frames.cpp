// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>

#include <orbitauth/frames.hpp>

using namespace orbitauth;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

EcefState point_at(const GroundStation& gs, double lat, double lon, double radius) {
    (void)gs;
    return {{radius * std::cos(lat) * std::cos(lon), radius * std::cos(lat) * std::sin(lon),
             radius * std::sin(lat)},
            {0.0, 0.0, 0.0},
            0.0};
}

}  // namespace

TEST_CASE("sidereal angle follows the linear model", "[frames]") {
    // 280.4606 deg at the epoch, advancing 360.9856473 deg per day.
    CHECK_THAT(gmst(0.0), WithinRel(4.894960892118808, 1e-12));
    CHECK_THAT(gmst(kSecondsPerDay), WithinRel(deg_to_rad(281.4462473), 1e-10));
    CHECK(gmst(12'345.0) >= 0.0);
    CHECK(gmst(12'345.0) < kTwoPi);
}

TEST_CASE("eci/ecef transforms are mutually inverse", "[frames]") {
    const EciState eci{{6.8e6, -1.2e6, 2.3e6}, {-1.5e3, 7.1e3, 0.4e3}, 5'000.0};
    const EciState back = ecef_to_eci(eci_to_ecef(eci));
    CHECK_THAT(norm(back.position - eci.position), WithinAbs(0.0, 1e-6));
    CHECK_THAT(norm(back.velocity - eci.velocity), WithinAbs(0.0, 1e-9));
    CHECK(back.time == eci.time);
}

TEST_CASE("frame rotation preserves position norm but not velocity norm", "[frames]") {
    const EciState eci{{6.8e6, -1.2e6, 2.3e6}, {-1.5e3, 7.1e3, 0.4e3}, 5'000.0};
    const EcefState ecef = eci_to_ecef(eci);
    CHECK_THAT(norm(ecef.position), WithinRel(norm(eci.position), 1e-12));
    // the transport term -omega x r changes the velocity magnitude
    CHECK(std::abs(norm(ecef.velocity) - norm(eci.velocity)) > 1.0);
}

TEST_CASE("near-synchronous equatorial orbit is almost fixed in ecef", "[frames]") {
    // With this gravitational parameter the synchronous radius is close to
    // 42164 km; the residual ECEF speed there is below 1 m/s, which checks
    // the velocity transport term end to end.
    KeplerianElements el;
    el.semi_major_axis = 42'164'000.0;
    const EcefState s = eci_to_ecef(propagate(el, 7'200.0));
    CHECK(norm(s.velocity) < 1.0);
}

TEST_CASE("ground station ecef position", "[frames]") {
    CHECK_THAT(norm(ground_station_ecef({0.0, 0.0, 0.0})), WithinRel(kConstants.earth_radius, 1e-12));
    const Vec3 pole = ground_station_ecef({deg_to_rad(90.0), 0.0, 100.0});
    CHECK_THAT(pole.z, WithinRel(kConstants.earth_radius + 100.0, 1e-9));
    CHECK_THAT(pole.x, WithinAbs(0.0, 1e-6));
    const Vec3 gs = ground_station_ecef({deg_to_rad(35.0), deg_to_rad(129.0), 0.0});
    CHECK_THAT(gs.z, WithinRel(kConstants.earth_radius * std::sin(deg_to_rad(35.0)), 1e-12));
}

TEST_CASE("enu basis is right-handed and orthonormal", "[frames]") {
    const GroundStation gs{deg_to_rad(35.0), deg_to_rad(129.0), 0.0};
    const EnuBasis b = enu_basis(gs);
    CHECK_THAT(norm(b.east), WithinRel(1.0, 1e-12));
    CHECK_THAT(norm(b.north), WithinRel(1.0, 1e-12));
    CHECK_THAT(norm(b.up), WithinRel(1.0, 1e-12));
    CHECK_THAT(dot(b.east, b.north), WithinAbs(0.0, 1e-12));
    CHECK_THAT(dot(b.east, b.up), WithinAbs(0.0, 1e-12));
    CHECK_THAT(norm(cross(b.east, b.north) - b.up), WithinAbs(0.0, 1e-12));
    CHECK_THAT(norm(b.up - normalized(ground_station_ecef(gs))), WithinAbs(0.0, 1e-12));
}

TEST_CASE("topocentric angles follow the east-north-up convention", "[frames]") {
    const GroundStation gs{0.0, 0.0, 0.0};
    const double r = kConstants.earth_radius + 500e3;

    SECTION("satellite at zenith") {
        const TopocentricObservation obs = topocentric(gs, point_at(gs, 0.0, 0.0, r));
        CHECK_THAT(obs.elevation, WithinRel(kPi / 2.0, 1e-9));
        CHECK_THAT(obs.range, WithinRel(500e3, 1e-9));
    }
    SECTION("satellite due north gives azimuth 0") {
        const TopocentricObservation obs =
            topocentric(gs, point_at(gs, deg_to_rad(10.0), 0.0, r));
        CHECK_THAT(obs.azimuth, WithinAbs(0.0, 1e-9));
    }
    SECTION("satellite due east gives azimuth pi/2") {
        const TopocentricObservation obs =
            topocentric(gs, point_at(gs, 0.0, deg_to_rad(10.0), r));
        CHECK_THAT(obs.azimuth, WithinRel(kPi / 2.0, 1e-9));
    }
    SECTION("satellite due west gives azimuth 3*pi/2") {
        const TopocentricObservation obs =
            topocentric(gs, point_at(gs, 0.0, deg_to_rad(-10.0), r));
        CHECK_THAT(obs.azimuth, WithinRel(3.0 * kPi / 2.0, 1e-9));
    }
}

TEST_CASE("range rate matches a central-difference oracle", "[frames]") {
    const GroundStation gs{deg_to_rad(35.0), deg_to_rad(129.0), 0.0};
    KeplerianElements el;
    el.semi_major_axis = kConstants.earth_radius + 600e3;
    el.inclination = deg_to_rad(53.0);
    el.raan = deg_to_rad(17.6);
    el.true_anomaly = deg_to_rad(45.9);

    const double h = 0.05;
    for (double t = -240.0; t <= 240.0; t += 30.0) {
        const double analytic = observe(gs, el, t).range_rate;
        const double fd = (observe(gs, el, t + h).range - observe(gs, el, t - h).range) / (2 * h);
        CHECK_THAT(analytic, WithinAbs(fd, 1e-4 + 1e-6 * std::abs(fd)));
    }
}
