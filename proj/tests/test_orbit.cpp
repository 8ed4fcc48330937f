// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>

#include <orbitauth/orbit.hpp>

using namespace orbitauth;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

KeplerianElements circular_orbit(double altitude, double inclination) {
    KeplerianElements el;
    el.semi_major_axis = kConstants.earth_radius + altitude;
    el.inclination = inclination;
    return el;
}

}  // namespace

TEST_CASE("circular speed and period match direct evaluation", "[orbit]") {
    // Independently computed from v = sqrt(mu/a), T = 2*pi*sqrt(a^3/mu).
    CHECK_THAT(circular_speed(6'978'137.0), WithinRel(7557.861018045515, 1e-12));
    CHECK_THAT(circular_speed(6'878'137.0), WithinRel(7612.603954398612, 1e-12));
    CHECK_THAT(orbital_period(6'978'137.0), WithinRel(5801.23500090832, 1e-12));
    CHECK_THAT(orbital_period(42'164'000.0), WithinRel(86163.61830152525, 1e-12));
    CHECK_THAT(mean_motion(6'978'137.0), WithinRel(0.0010830771906664366, 1e-12));
    CHECK_THAT(mean_motion(6'978'137.0) * orbital_period(6'978'137.0),
               WithinRel(kTwoPi, 1e-12));
}

TEST_CASE("kepler solver matches fixed-point oracle and inverts exactly", "[orbit]") {
    // Newton solution of E - 0.3 sin E = 1, computed independently.
    CHECK_THAT(solve_kepler(1.0, 0.3), WithinAbs(1.2880913132118377, 1e-11));

    for (double e : {0.0, 1e-6, 0.1, 0.7, 0.95}) {
        for (double mean = -3.0; mean <= 3.0; mean += 0.37) {
            const double E = solve_kepler(mean, e);
            CHECK_THAT(mean_from_eccentric(E, e), WithinAbs(mean, 1e-10));
        }
    }
}

TEST_CASE("anomaly conversions are mutually inverse", "[orbit]") {
    for (double e : {0.0, 0.2, 0.8}) {
        for (double nu = -3.0; nu <= 3.0; nu += 0.41) {
            const double E = eccentric_from_true(nu, e);
            CHECK_THAT(true_from_eccentric(E, e), WithinAbs(nu, 1e-12));
        }
    }
}

TEST_CASE("circular propagation keeps radius and speed constant", "[orbit]") {
    const KeplerianElements el = circular_orbit(600e3, deg_to_rad(53.0));
    const double T = orbital_period(el.semi_major_axis);
    const double v_circ = circular_speed(el.semi_major_axis);
    for (int k = 0; k <= 200; ++k) {
        const EciState s = propagate(el, k * T / 200.0);
        CHECK_THAT(norm(s.position), WithinRel(el.semi_major_axis, 1e-12));
        CHECK_THAT(norm(s.velocity), WithinRel(v_circ, 1e-12));
        // velocity is tangential on a circular orbit
        CHECK_THAT(dot(s.position, s.velocity) / (norm(s.position) * norm(s.velocity)),
                   WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("elliptic propagation satisfies vis-viva and the conic equation", "[orbit]") {
    KeplerianElements el = circular_orbit(600e3, deg_to_rad(53.0));
    el.semi_major_axis = 8'000e3;
    el.eccentricity = 0.1;
    el.raan = 1.0;
    el.arg_perigee = 2.0;
    el.true_anomaly = 0.5;

    const double a = el.semi_major_axis, e = el.eccentricity;
    const double T = orbital_period(a);
    for (int k = 0; k <= 97; ++k) {
        const EciState s = propagate(el, k * T / 97.0);
        const double r = norm(s.position), v = norm(s.velocity);
        CHECK_THAT(v * v, WithinRel(kConstants.mu * (2.0 / r - 1.0 / a), 1e-10));
        CHECK(r >= a * (1.0 - e) * (1.0 - 1e-12));
        CHECK(r <= a * (1.0 + e) * (1.0 + 1e-12));
        // specific angular momentum is conserved: |r x v| = sqrt(mu a (1-e^2))
        CHECK_THAT(norm(cross(s.position, s.velocity)),
                   WithinRel(std::sqrt(kConstants.mu * a * (1.0 - e * e)), 1e-10));
    }
}

TEST_CASE("propagation returns to the initial state after one period", "[orbit]") {
    KeplerianElements el = circular_orbit(600e3, deg_to_rad(53.0));
    el.true_anomaly = 1.2;
    const double T = orbital_period(el.semi_major_axis);
    const EciState s0 = propagate(el, 0.0);
    const EciState s1 = propagate(el, T);
    CHECK_THAT(norm(s1.position - s0.position) / norm(s0.position), WithinAbs(0.0, 1e-9));
    CHECK_THAT(norm(s1.velocity - s0.velocity) / norm(s0.velocity), WithinAbs(0.0, 1e-9));
}

TEST_CASE("propagation works backwards in time", "[orbit]") {
    const KeplerianElements el = circular_orbit(600e3, deg_to_rad(53.0));
    const EciState back = propagate(el, -300.0);
    const EciState fwd = propagate(el, orbital_period(el.semi_major_axis) - 300.0);
    CHECK_THAT(norm(back.position - fwd.position), WithinAbs(0.0, 1e-4));
}

TEST_CASE("element validation rejects out-of-domain orbits", "[orbit]") {
    KeplerianElements el = circular_orbit(600e3, deg_to_rad(53.0));
    SECTION("hyperbolic eccentricity") {
        el.eccentricity = 1.0;
        CHECK_THROWS_AS(validate(el), std::invalid_argument);
    }
    SECTION("perigee below the surface") {
        el.semi_major_axis = kConstants.earth_radius - 1.0;
        CHECK_THROWS_AS(validate(el), std::invalid_argument);
    }
    SECTION("angles outside their ranges") {
        el.raan = kTwoPi + 0.1;
        CHECK_THROWS_AS(validate(el), std::invalid_argument);
    }
    SECTION("nonpositive semi-major axis rejected by rate helpers") {
        CHECK_THROWS_AS(circular_speed(0.0), std::domain_error);
        CHECK_THROWS_AS(orbital_period(-1.0), std::domain_error);
        CHECK_THROWS_AS(mean_motion(0.0), std::domain_error);
    }
}
