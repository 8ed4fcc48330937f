// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>

#include <orbitauth/observables.hpp>

using namespace orbitauth;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("doppler shift magnitude and sign", "[observables]") {
    const LinkParams link{2.0e9, 1.0};
    // f_D = -(f_c/c) * range rate, computed independently for -7500 m/s.
    CHECK_THAT(doppler_shift(-7500.0, link), WithinRel(50034.61427972281, 1e-12));
    // approaching (negative range rate) => positive shift; receding => negative
    CHECK(doppler_shift(-1.0, link) > 0.0);
    CHECK(doppler_shift(1.0, link) < 0.0);
    CHECK(doppler_shift(0.0, link) == 0.0);
    // proportional to carrier frequency
    CHECK_THAT(doppler_shift(-7500.0, {4.0e9, 1.0}),
               WithinRel(2.0 * doppler_shift(-7500.0, link), 1e-12));
}

TEST_CASE("round-trip time is twice the one-way light time", "[observables]") {
    CHECK_THAT(round_trip_time(600e3), WithinRel(0.004002769142377825, 1e-12));
    CHECK_THAT(round_trip_time(299'792'458.0), WithinRel(2.0, 1e-12));
}

TEST_CASE("received power follows the free-space law", "[observables]") {
    const LinkParams link{2.0e9, 1.0};
    CHECK_THAT(received_power(1'000e3, link), WithinRel(1.422858414285863e-16, 1e-12));
    // inverse-square in range, inverse-square in carrier
    CHECK_THAT(received_power(2'000e3, link),
               WithinRel(received_power(1'000e3, link) / 4.0, 1e-12));
    CHECK_THAT(received_power(1'000e3, {4.0e9, 1.0}),
               WithinRel(received_power(1'000e3, link) / 4.0, 1e-12));
    // linear in transmit power-gain product
    CHECK_THAT(received_power(1'000e3, {2.0e9, 7.0}),
               WithinRel(7.0 * received_power(1'000e3, link), 1e-12));
    CHECK_THROWS_AS(received_power(0.0, link), std::domain_error);
}

TEST_CASE("feature vector assembles all observables consistently", "[observables]") {
    const LinkParams link{2.0e9, 1.0};
    TopocentricObservation obs;
    obs.range = 1'000e3;
    obs.range_rate = -7500.0;
    obs.elevation = 0.7;
    obs.azimuth = 2.1;
    const FeatureVector f = feature_vector(obs, link);
    CHECK(f.doppler_hz == doppler_shift(obs.range_rate, link));
    CHECK(f.elevation_rad == obs.elevation);
    CHECK(f.azimuth_rad == obs.azimuth);
    CHECK(f.rsp_w == received_power(obs.range, link));
    CHECK(f.rtt_s == round_trip_time(obs.range));
}

TEST_CASE("measurement noise has the configured spread", "[observables]") {
    const NoiseModel noise;
    FeatureVector clean;
    clean.doppler_hz = 1'000.0;
    clean.elevation_rad = 0.5;
    clean.azimuth_rad = 1.0;
    clean.rsp_w = 1e-15;
    clean.rtt_s = 5e-3;

    RngStream rng(123);
    const int kDraws = 200'000;
    double sum_d = 0, sum_d2 = 0, sum_e = 0, sum_e2 = 0, sum_db = 0, sum_db2 = 0;
    for (int k = 0; k < kDraws; ++k) {
        const FeatureVector m = add_noise(clean, noise, rng);
        const double dd = m.doppler_hz - clean.doppler_hz;
        const double de = m.elevation_rad - clean.elevation_rad;
        const double db = 10.0 * std::log10(m.rsp_w / clean.rsp_w);
        sum_d += dd;
        sum_d2 += dd * dd;
        sum_e += de;
        sum_e2 += de * de;
        sum_db += db;
        sum_db2 += db * db;
    }
    const double inv = 1.0 / kDraws;
    // law of large numbers: means near 0, standard deviations near sigma
    CHECK_THAT(sum_d * inv, WithinAbs(0.0, 5.0 * noise.sigma_doppler_hz / std::sqrt(kDraws)));
    CHECK_THAT(std::sqrt(sum_d2 * inv), WithinRel(noise.sigma_doppler_hz, 0.02));
    CHECK_THAT(std::sqrt(sum_e2 * inv), WithinRel(noise.sigma_elevation_rad, 0.02));
    // rsp noise is multiplicative: exactly Gaussian in the dB domain
    CHECK_THAT(sum_db * inv, WithinAbs(0.0, 5.0 * noise.sigma_rsp_db / std::sqrt(kDraws)));
    CHECK_THAT(std::sqrt(sum_db2 * inv), WithinRel(noise.sigma_rsp_db, 0.02));
}

TEST_CASE("noise is deterministic for a given stream seed", "[observables]") {
    const NoiseModel noise;
    FeatureVector clean;
    clean.rsp_w = 1e-15;
    RngStream a(42), b(42), c(43);
    const FeatureVector ma = add_noise(clean, noise, a);
    const FeatureVector mb = add_noise(clean, noise, b);
    const FeatureVector mc = add_noise(clean, noise, c);
    CHECK(ma.doppler_hz == mb.doppler_hz);
    CHECK(ma.elevation_rad == mb.elevation_rad);
    CHECK(ma.azimuth_rad == mb.azimuth_rad);
    CHECK(ma.rsp_w == mb.rsp_w);
    CHECK(ma.rtt_s == mb.rtt_s);
    CHECK(ma.doppler_hz != mc.doppler_hz);
}

TEST_CASE("rsp noise never produces nonpositive power", "[observables]") {
    const NoiseModel noise;
    FeatureVector clean;
    clean.rsp_w = 1e-16;
    RngStream rng(7);
    for (int k = 0; k < 10'000; ++k) CHECK(add_noise(clean, noise, rng).rsp_w > 0.0);
}
