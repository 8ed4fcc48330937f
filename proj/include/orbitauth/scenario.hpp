// SPDX-License-Identifier: MIT
//
// Scenario configuration and materialization. A ScenarioConfig is the
// plain-data description (JSON-loadable, angles in degrees, lengths in km
// where noted); a Scenario is the materialized object graph ready for
// simulation: ground station, claimed orbit, its CCM over one visibility
// window, and the attacker's precomputed trajectory on the same grid.

#ifndef ORBITAUTH_SCENARIO_HPP
#define ORBITAUTH_SCENARIO_HPP

#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitauth/adversary.hpp"
#include "orbitauth/auth.hpp"
#include "orbitauth/ccm.hpp"

namespace orbitauth {

/// Configuration problem, carrying the dotted path of the offending field.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Claimed (legitimate) orbit as configured: circular-orbit altitude plus
/// orientation angles in degrees. Epoch is seconds since J2000 and marks
/// the culmination instant for preset geometries.
struct AliceConfig {
    double altitude_km = 600.0;
    double eccentricity = 0.0;
    double inclination_deg = 53.0;
    double raan_deg = 0.0;
    double arg_perigee_deg = 0.0;
    double true_anomaly_deg = 0.0;
    double epoch_s = 0.0;
};

struct StationConfig {
    double latitude_deg = 35.0;
    double longitude_deg = 129.0;
    double altitude_m = 0.0;
};

struct NoiseConfig {
    double sigma_elevation_deg = 1.0;
    double sigma_azimuth_deg = 1.0;
    double sigma_doppler_hz = 200.0;
    double sigma_rsp_db = 1.0;
    double sigma_rtt_s = 100e-9;
};

struct AdversaryFileConfig {
    std::string knowledge = "blind";
    std::string placement = "coplanar";
    double altitude_km = 1200.0;
    double alignment_time_s = 0.0;
    double along_track_offset_deg = 0.0;
    bool doppler_precompensation = false;
};

struct PolicyConfig {
    std::string kind = "random";
    long start_slot = -1;  // negative: materialization picks the default
};

/// Everything needed to reproduce a run, in file-friendly units.
struct ScenarioConfig {
    AliceConfig alice;
    StationConfig station;
    LinkParams link;
    NoiseConfig noise;
    AdversaryFileConfig adversary;
    std::vector<std::string> features = {"doppler", "elevation"};
    PolicyConfig policy;
    double slot_duration_s = 1.0;
    double mask_elevation_deg = 10.0;
};

/// Circular orbit of the given inclination and altitude that culminates at
/// the station's zenith at `epoch` (ascending pass). Requires the station
/// latitude magnitude not to exceed the inclination.
inline KeplerianElements zenith_pass_orbit(const GroundStation& gs, double altitude,
                                           double inclination, double epoch) {
    const double sin_u = std::sin(gs.latitude) / std::sin(inclination);
    if (!(std::abs(sin_u) <= 1.0))
        throw std::invalid_argument(
            "zenith_pass_orbit: station latitude exceeds the orbit inclination");
    const double u = std::asin(sin_u);
    const double alpha = gs.longitude + gmst(epoch);

    KeplerianElements el;
    el.semi_major_axis = kConstants.earth_radius + altitude;
    el.eccentricity = 0.0;
    el.inclination = inclination;
    el.raan = wrap_two_pi(alpha - std::atan2(std::cos(inclination) * std::sin(u), std::cos(u)));
    el.arg_perigee = 0.0;
    el.true_anomaly = wrap_two_pi(u);
    el.epoch = epoch;
    return el;
}

/// Baseline configuration: the preset ground station and claimed orbit
/// with a blind coplanar attacker and random challenge slots. This is also
/// the set of defaults that fill omitted fields of a loaded config.
inline ScenarioConfig default_scenario() {
    ScenarioConfig cfg;
    const GroundStation gs{deg_to_rad(cfg.station.latitude_deg),
                           deg_to_rad(cfg.station.longitude_deg), cfg.station.altitude_m};
    const KeplerianElements alice =
        zenith_pass_orbit(gs, cfg.alice.altitude_km * 1e3, deg_to_rad(cfg.alice.inclination_deg),
                          cfg.alice.epoch_s);
    cfg.alice.raan_deg = rad_to_deg(alice.raan);
    cfg.alice.arg_perigee_deg = rad_to_deg(alice.arg_perigee);
    cfg.alice.true_anomaly_deg = rad_to_deg(alice.true_anomaly);
    return cfg;
}

namespace detail {

inline const nlohmann::json* maybe_child(const nlohmann::json& j, const std::string& scope,
                                         const char* key, bool want_object) {
    if (!j.contains(key)) return nullptr;
    const nlohmann::json& child = j.at(key);
    if (want_object && !child.is_object())
        throw ConfigError(scope.empty() ? key : scope + "." + key, "expected an object");
    return &child;
}

inline double get_number(const nlohmann::json& j, const std::string& scope, const char* key,
                         double fallback) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_number()) throw ConfigError(scope + "." + key, "expected a number");
    return v.get<double>();
}

inline long get_integer(const nlohmann::json& j, const std::string& scope, const char* key,
                        long fallback) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(scope + "." + key, "expected an integer");
    return v.get<long>();
}

inline bool get_boolean(const nlohmann::json& j, const std::string& scope, const char* key,
                        bool fallback) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_boolean()) throw ConfigError(scope + "." + key, "expected a boolean");
    return v.get<bool>();
}

inline std::string get_string(const nlohmann::json& j, const std::string& scope, const char* key,
                              const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_string()) throw ConfigError(scope + "." + key, "expected a string");
    return v.get<std::string>();
}

}  // namespace detail

/// Parse a configuration from JSON. Missing fields take the defaults of
/// `default_scenario()`; present fields must have the right type or a
/// ConfigError names them.
inline ScenarioConfig scenario_config_from_json(const nlohmann::json& j) {
    using detail::get_boolean;
    using detail::get_integer;
    using detail::get_number;
    using detail::get_string;
    if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");

    ScenarioConfig cfg = default_scenario();
    if (const auto* a = detail::maybe_child(j, "", "alice", true)) {
        cfg.alice.altitude_km = get_number(*a, "alice", "altitude_km", cfg.alice.altitude_km);
        cfg.alice.eccentricity = get_number(*a, "alice", "eccentricity", cfg.alice.eccentricity);
        cfg.alice.inclination_deg =
            get_number(*a, "alice", "inclination_deg", cfg.alice.inclination_deg);
        cfg.alice.raan_deg = get_number(*a, "alice", "raan_deg", cfg.alice.raan_deg);
        cfg.alice.arg_perigee_deg =
            get_number(*a, "alice", "arg_perigee_deg", cfg.alice.arg_perigee_deg);
        cfg.alice.true_anomaly_deg =
            get_number(*a, "alice", "true_anomaly_deg", cfg.alice.true_anomaly_deg);
        cfg.alice.epoch_s = get_number(*a, "alice", "epoch_s", cfg.alice.epoch_s);
    }
    if (const auto* s = detail::maybe_child(j, "", "station", true)) {
        cfg.station.latitude_deg =
            get_number(*s, "station", "latitude_deg", cfg.station.latitude_deg);
        cfg.station.longitude_deg =
            get_number(*s, "station", "longitude_deg", cfg.station.longitude_deg);
        cfg.station.altitude_m = get_number(*s, "station", "altitude_m", cfg.station.altitude_m);
    }
    if (const auto* l = detail::maybe_child(j, "", "link", true)) {
        cfg.link.carrier_hz = get_number(*l, "link", "carrier_hz", cfg.link.carrier_hz);
        cfg.link.tx_power_gain_w =
            get_number(*l, "link", "tx_power_gain_w", cfg.link.tx_power_gain_w);
    }
    if (const auto* n = detail::maybe_child(j, "", "noise", true)) {
        cfg.noise.sigma_elevation_deg =
            get_number(*n, "noise", "sigma_elevation_deg", cfg.noise.sigma_elevation_deg);
        cfg.noise.sigma_azimuth_deg =
            get_number(*n, "noise", "sigma_azimuth_deg", cfg.noise.sigma_azimuth_deg);
        cfg.noise.sigma_doppler_hz =
            get_number(*n, "noise", "sigma_doppler_hz", cfg.noise.sigma_doppler_hz);
        cfg.noise.sigma_rsp_db = get_number(*n, "noise", "sigma_rsp_db", cfg.noise.sigma_rsp_db);
        cfg.noise.sigma_rtt_s = get_number(*n, "noise", "sigma_rtt_s", cfg.noise.sigma_rtt_s);
    }
    if (const auto* a = detail::maybe_child(j, "", "adversary", true)) {
        cfg.adversary.knowledge =
            get_string(*a, "adversary", "knowledge", cfg.adversary.knowledge);
        cfg.adversary.placement =
            get_string(*a, "adversary", "placement", cfg.adversary.placement);
        cfg.adversary.altitude_km =
            get_number(*a, "adversary", "altitude_km", cfg.adversary.altitude_km);
        cfg.adversary.alignment_time_s =
            get_number(*a, "adversary", "alignment_time_s", cfg.adversary.alignment_time_s);
        cfg.adversary.along_track_offset_deg = get_number(*a, "adversary", "along_track_offset_deg",
                                                          cfg.adversary.along_track_offset_deg);
        cfg.adversary.doppler_precompensation = get_boolean(
            *a, "adversary", "doppler_precompensation", cfg.adversary.doppler_precompensation);
    }
    if (j.contains("features")) {
        const nlohmann::json& f = j.at("features");
        if (!f.is_array()) throw ConfigError("features", "expected an array of feature names");
        cfg.features.clear();
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (!f[k].is_string())
                throw ConfigError("features[" + std::to_string(k) + "]", "expected a string");
            cfg.features.push_back(f[k].get<std::string>());
        }
    }
    if (const auto* p = detail::maybe_child(j, "", "policy", true)) {
        cfg.policy.kind = get_string(*p, "policy", "kind", cfg.policy.kind);
        cfg.policy.start_slot = get_integer(*p, "policy", "start_slot", cfg.policy.start_slot);
    }
    cfg.slot_duration_s = get_number(j, "<root>", "slot_duration_s", cfg.slot_duration_s);
    cfg.mask_elevation_deg = get_number(j, "<root>", "mask_elevation_deg", cfg.mask_elevation_deg);
    return cfg;
}

inline nlohmann::json to_json(const ScenarioConfig& cfg) {
    return {
        {"alice",
         {{"altitude_km", cfg.alice.altitude_km},
          {"eccentricity", cfg.alice.eccentricity},
          {"inclination_deg", cfg.alice.inclination_deg},
          {"raan_deg", cfg.alice.raan_deg},
          {"arg_perigee_deg", cfg.alice.arg_perigee_deg},
          {"true_anomaly_deg", cfg.alice.true_anomaly_deg},
          {"epoch_s", cfg.alice.epoch_s}}},
        {"station",
         {{"latitude_deg", cfg.station.latitude_deg},
          {"longitude_deg", cfg.station.longitude_deg},
          {"altitude_m", cfg.station.altitude_m}}},
        {"link",
         {{"carrier_hz", cfg.link.carrier_hz}, {"tx_power_gain_w", cfg.link.tx_power_gain_w}}},
        {"noise",
         {{"sigma_elevation_deg", cfg.noise.sigma_elevation_deg},
          {"sigma_azimuth_deg", cfg.noise.sigma_azimuth_deg},
          {"sigma_doppler_hz", cfg.noise.sigma_doppler_hz},
          {"sigma_rsp_db", cfg.noise.sigma_rsp_db},
          {"sigma_rtt_s", cfg.noise.sigma_rtt_s}}},
        {"adversary",
         {{"knowledge", cfg.adversary.knowledge},
          {"placement", cfg.adversary.placement},
          {"altitude_km", cfg.adversary.altitude_km},
          {"alignment_time_s", cfg.adversary.alignment_time_s},
          {"along_track_offset_deg", cfg.adversary.along_track_offset_deg},
          {"doppler_precompensation", cfg.adversary.doppler_precompensation}}},
        {"features", cfg.features},
        {"policy", {{"kind", cfg.policy.kind}, {"start_slot", cfg.policy.start_slot}}},
        {"slot_duration_s", cfg.slot_duration_s},
        {"mask_elevation_deg", cfg.mask_elevation_deg},
    };
}

inline ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
    }
    return scenario_config_from_json(j);
}

inline void save_scenario_config(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_scenario_config: cannot open " + path);
    out << to_json(cfg).dump(2) << '\n';
}

namespace detail {

inline AdversaryKnowledge parse_knowledge(const std::string& s) {
    if (s == "blind") return AdversaryKnowledge::kBlind;
    if (s == "full") return AdversaryKnowledge::kFull;
    throw ConfigError("adversary.knowledge", "expected \"blind\" or \"full\", got \"" + s + "\"");
}

inline AdversaryPlacement parse_placement(const std::string& s) {
    if (s == "coplanar") return AdversaryPlacement::kCoplanar;
    if (s == "collinear") return AdversaryPlacement::kCollinear;
    throw ConfigError("adversary.placement",
                      "expected \"coplanar\" or \"collinear\", got \"" + s + "\"");
}

inline PolicyKind parse_policy_kind(const std::string& s) {
    if (s == "fixed") return PolicyKind::kFixedConsecutive;
    if (s == "random") return PolicyKind::kUniformRandom;
    throw ConfigError("policy.kind", "expected \"fixed\" or \"random\", got \"" + s + "\"");
}

inline FeatureSet parse_features(const std::vector<std::string>& names) {
    FeatureSet set;
    set.doppler = set.elevation = set.azimuth = set.rsp = set.rtt = false;
    for (const std::string& name : names) {
        if (name == "doppler")
            set.doppler = true;
        else if (name == "elevation")
            set.elevation = true;
        else if (name == "azimuth")
            set.azimuth = true;
        else if (name == "rsp")
            set.rsp = true;
        else if (name == "rtt")
            set.rtt = true;
        else
            throw ConfigError("features", "unknown feature \"" + name + "\"");
    }
    if (set.count() == 0) throw ConfigError("features", "at least one feature is required");
    return set;
}

}  // namespace detail

/// Materialized scenario: every object the protocol and the Monte Carlo
/// estimator need, precomputed once.
struct Scenario {
    ScenarioConfig config;
    GroundStation station;
    KeplerianElements alice;
    LinkParams link;
    NoiseModel noise;
    FeatureSet features;
    SamplingPolicy policy;
    AdversaryState adversary;
    Ccm ccm;
    std::vector<FeatureVector> trudy_rows;
    std::size_t alignment_slot = 0;
};

/// Turn a configuration into a runnable scenario:
///  - build the claimed orbit and find the visibility window containing its
///    epoch (searching half a period to either side),
///  - build the CCM on that window,
///  - snap the attacker's alignment time onto the slot grid and construct
///    her orbit at the snapped instant,
///  - precompute her observables on the grid,
///  - resolve a negative fixed-policy start slot to the alignment slot.
inline Scenario materialize(const ScenarioConfig& cfg) {
    Scenario sc;
    sc.config = cfg;

    sc.station.latitude = deg_to_rad(cfg.station.latitude_deg);
    sc.station.longitude = deg_to_rad(cfg.station.longitude_deg);
    sc.station.altitude = cfg.station.altitude_m;
    if (std::abs(cfg.station.latitude_deg) > 90.0)
        throw ConfigError("station.latitude_deg", "must lie in [-90, 90]");

    sc.alice.semi_major_axis = kConstants.earth_radius + cfg.alice.altitude_km * 1e3;
    sc.alice.eccentricity = cfg.alice.eccentricity;
    sc.alice.inclination = deg_to_rad(cfg.alice.inclination_deg);
    sc.alice.raan = wrap_two_pi(deg_to_rad(cfg.alice.raan_deg));
    sc.alice.arg_perigee = wrap_two_pi(deg_to_rad(cfg.alice.arg_perigee_deg));
    sc.alice.true_anomaly = wrap_two_pi(deg_to_rad(cfg.alice.true_anomaly_deg));
    sc.alice.epoch = cfg.alice.epoch_s;
    try {
        validate(sc.alice);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("alice", e.what());
    }

    sc.link = cfg.link;
    if (!(sc.link.carrier_hz > 0.0)) throw ConfigError("link.carrier_hz", "must be positive");
    if (!(sc.link.tx_power_gain_w > 0.0))
        throw ConfigError("link.tx_power_gain_w", "must be positive");

    sc.noise.sigma_elevation_rad = deg_to_rad(cfg.noise.sigma_elevation_deg);
    sc.noise.sigma_azimuth_rad = deg_to_rad(cfg.noise.sigma_azimuth_deg);
    sc.noise.sigma_doppler_hz = cfg.noise.sigma_doppler_hz;
    sc.noise.sigma_rsp_db = cfg.noise.sigma_rsp_db;
    sc.noise.sigma_rtt_s = cfg.noise.sigma_rtt_s;
    if (!(sc.noise.sigma_elevation_rad > 0.0) || !(sc.noise.sigma_azimuth_rad > 0.0) ||
        !(sc.noise.sigma_doppler_hz > 0.0) || !(sc.noise.sigma_rsp_db > 0.0) ||
        !(sc.noise.sigma_rtt_s > 0.0))
        throw ConfigError("noise", "all noise sigmas must be positive");

    sc.features = detail::parse_features(cfg.features);
    sc.policy.kind = detail::parse_policy_kind(cfg.policy.kind);
    sc.policy.start_slot = cfg.policy.start_slot;

    if (!(cfg.slot_duration_s > 0.0)) throw ConfigError("slot_duration_s", "must be positive");
    if (!(cfg.mask_elevation_deg > 0.0 && cfg.mask_elevation_deg < 90.0))
        throw ConfigError("mask_elevation_deg", "must lie in (0, 90)");

    const double half_period = 0.5 * orbital_period(sc.alice.semi_major_axis);
    const auto windows =
        visibility_windows(sc.station, sc.alice, sc.alice.epoch - half_period,
                           sc.alice.epoch + half_period, deg_to_rad(cfg.mask_elevation_deg));
    const VisibilityWindow* pass = nullptr;
    for (const auto& w : windows)
        if (w.start <= sc.alice.epoch && sc.alice.epoch <= w.end) pass = &w;
    if (!pass)
        throw std::runtime_error(
            "materialize: the claimed orbit is not visible at its epoch; no pass to authenticate");

    sc.ccm = build_ccm(sc.station, sc.alice, *pass, cfg.slot_duration_s, sc.link);

    AdversaryConfig adv;
    adv.knowledge = detail::parse_knowledge(cfg.adversary.knowledge);
    adv.placement = detail::parse_placement(cfg.adversary.placement);
    adv.altitude = cfg.adversary.altitude_km * 1e3;
    if (!(adv.altitude > 0.0)) throw ConfigError("adversary.altitude_km", "must be positive");
    adv.along_track_offset = deg_to_rad(cfg.adversary.along_track_offset_deg);
    adv.doppler_precompensation = cfg.adversary.doppler_precompensation;

    if (adv.placement == AdversaryPlacement::kCollinear) {
        if (cfg.adversary.alignment_time_s < pass->start ||
            cfg.adversary.alignment_time_s > pass->end)
            throw ConfigError("adversary.alignment_time_s",
                              "must lie inside the visibility window [" +
                                  std::to_string(pass->start) + ", " +
                                  std::to_string(pass->end) + "]");
        sc.alignment_slot = sc.ccm.nearest_slot(cfg.adversary.alignment_time_s);
        adv.alignment_time = sc.ccm.times[sc.alignment_slot];
    } else {
        sc.alignment_slot = 0;
        adv.alignment_time = sc.ccm.times.front();
    }

    try {
        sc.adversary = make_adversary(adv, sc.station, sc.alice);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("adversary", e.what());
    }
    sc.trudy_rows = trudy_trajectory(sc.station, sc.adversary, sc.ccm, sc.link);

    if (sc.policy.kind == PolicyKind::kFixedConsecutive && sc.policy.start_slot < 0)
        sc.policy.start_slot = static_cast<long>(sc.alignment_slot);
    if (sc.policy.start_slot >= static_cast<long>(sc.ccm.size()))
        throw ConfigError("policy.start_slot", "beyond the last slot of the visibility window");

    return sc;
}

/// Named preset configurations:
///  - "scenario-1": blind coplanar attacker, Doppler + elevation features,
///    fixed challenge at the start of the pass.
///  - "scenario-2": full-knowledge collinear attacker aligned 120 s before
///    culmination, Doppler pre-compensation on, elevation-only features,
///    fixed challenges from the alignment slot.
///  - "scenario-3": same attacker and features, random challenge slots
///    (the sweep runner compares this against the fixed policy).
/// The attacker's altitude defaults to 1200 km and may be overridden.
inline ScenarioConfig preset_scenario(const std::string& name,
                                      double trudy_altitude_km = 1200.0) {
    ScenarioConfig cfg = default_scenario();
    cfg.adversary.altitude_km = trudy_altitude_km;
    if (name == "scenario-1") {
        cfg.adversary.knowledge = "blind";
        cfg.adversary.placement = "coplanar";
        cfg.features = {"doppler", "elevation"};
        cfg.policy.kind = "fixed";
        cfg.policy.start_slot = 0;
        return cfg;
    }
    if (name == "scenario-2" || name == "scenario-3") {
        cfg.adversary.knowledge = "full";
        cfg.adversary.placement = "collinear";
        cfg.adversary.alignment_time_s = -120.0;
        cfg.adversary.doppler_precompensation = true;
        cfg.features = {"elevation"};
        cfg.policy.kind = name == "scenario-2" ? "fixed" : "random";
        cfg.policy.start_slot = -1;
        return cfg;
    }
    throw ConfigError("preset", "unknown preset \"" + name +
                                    "\" (expected scenario-1, scenario-2 or scenario-3)");
}

}  // namespace orbitauth

#endif  // ORBITAUTH_SCENARIO_HPP
