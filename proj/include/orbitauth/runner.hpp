// SPDX-License-Identifier: MIT
//
// Batch execution: materialize a scenario, sweep DEP over challenge sizes,
// and emit the plot-ready CSVs plus a manifest describing the run. Two
// runs with the same configuration, seed and trial count produce
// byte-identical CSVs for any worker count; only the manifest's wall-clock
// timestamps differ.

#ifndef ORBITAUTH_RUNNER_HPP
#define ORBITAUTH_RUNNER_HPP

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orbitauth/csvio.hpp"
#include "orbitauth/dep.hpp"
#include "orbitauth/scenario.hpp"
#include "orbitauth/version.hpp"

namespace orbitauth {

/// 64-bit FNV-1a over a byte string; used to fingerprint configurations.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char ch : bytes) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

inline std::string config_hash(const ScenarioConfig& cfg) {
    const std::uint64_t h = fnv1a64(to_json(cfg).dump());
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Current UTC wall time as ISO-8601.
inline std::string now_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

/// Record of one batch run: enough to audit and reproduce it.
struct RunManifest {
    std::string config_hash;
    std::uint64_t master_seed = 0;
    std::string tool_version;
    std::string started_at;
    std::string finished_at;
    std::string out_dir;
    std::vector<std::string> outputs;  // file names relative to out_dir
};

inline nlohmann::json to_json(const RunManifest& m) {
    return {
        {"config_hash", m.config_hash},     {"master_seed", m.master_seed},
        {"tool_version", m.tool_version},   {"started_at", m.started_at},
        {"finished_at", m.finished_at},     {"out_dir", m.out_dir},
        {"outputs", m.outputs},
    };
}

inline void save_manifest(const RunManifest& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_manifest: cannot open " + path);
    out << to_json(m).dump(2) << '\n';
}

/// Run a full scenario: DEP sweep over `n_values`, trajectory comparison
/// CSV, per-size threshold CSVs, summary CSV, and the manifest, all in
/// `out_dir` (created if missing).
inline RunManifest run_scenario(const ScenarioConfig& cfg, const std::vector<std::size_t>& n_values,
                                std::size_t trials, std::uint64_t master_seed,
                                const std::string& out_dir, std::size_t workers = 0) {
    if (n_values.empty())
        throw std::invalid_argument("run_scenario: need at least one challenge size");
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    RunManifest manifest;
    manifest.config_hash = config_hash(cfg);
    manifest.master_seed = master_seed;
    manifest.tool_version = kVersion;
    manifest.started_at = now_iso8601();
    manifest.out_dir = out_dir;

    const Scenario sc = materialize(cfg);
    const auto join = [&out_dir](const std::string& name) {
        return (fs::path(out_dir) / name).string();
    };

    emit_trajectory(sc.ccm, sc.trudy_rows, join("trajectory.csv"));
    manifest.outputs.push_back("trajectory.csv");

    const std::vector<DepResult> results =
        dep_versus_n(sc, n_values, trials, master_seed, workers);
    for (const DepResult& r : results) {
        const std::string name = "dep_" + std::to_string(r.n) + ".csv";
        write_dep_csv(r, join(name));
        manifest.outputs.push_back(name);
    }
    write_summary_csv(results, join("summary.csv"));
    manifest.outputs.push_back("summary.csv");

    manifest.finished_at = now_iso8601();
    save_manifest(manifest, join("manifest.json"));
    manifest.outputs.push_back("manifest.json");
    return manifest;
}

/// Challenge sizes swept by default for each preset.
inline std::vector<std::size_t> preset_n_values(const std::string& name) {
    if (name == "scenario-1") return {1};
    return {1, 5, 10, 20, 50};
}

/// Run a named preset end to end. An empty `n_values` picks the preset's
/// default sweep; `trudy_altitude_km` overrides the attacker's altitude.
inline RunManifest run_scenario_preset(const std::string& name, double trudy_altitude_km,
                                       std::vector<std::size_t> n_values, std::size_t trials,
                                       std::uint64_t master_seed, const std::string& out_dir,
                                       std::size_t workers = 0) {
    const ScenarioConfig cfg = preset_scenario(name, trudy_altitude_km);
    if (n_values.empty()) n_values = preset_n_values(name);
    return run_scenario(cfg, n_values, trials, master_seed, out_dir, workers);
}

}  // namespace orbitauth

#endif  // ORBITAUTH_RUNNER_HPP
