// SPDX-License-Identifier: MIT
//
// Command-line front end.
//
//   orbitauth propagate  — tabulate the claimed orbit's pass as CSV
//   orbitauth ccm        — build the reference matrix and emit it as JSON
//   orbitauth run        — DEP sweep for a configured scenario
//   orbitauth preset     — DEP sweep for a named case-study scenario
//
// Exit codes: 0 success, 2 configuration/usage error, 1 runtime error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <orbitauth/orbitauth.hpp>

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t trials = 10'000;
    std::vector<std::size_t> n_values;
    std::size_t threads = 0;
};

orbitauth::ScenarioConfig load_or_default(const std::string& path) {
    if (path.empty()) return orbitauth::default_scenario();
    return orbitauth::load_scenario_config(path);
}

void cmd_propagate(const CommonArgs& args) {
    const orbitauth::Scenario sc = orbitauth::materialize(load_or_default(args.config_path));
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.out.empty()) {
        file.open(args.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + args.out);
        out = &file;
    }
    *out << "time_s,x_m,y_m,z_m,vx_mps,vy_mps,vz_mps,range_m,range_rate_mps,"
            "elevation_rad,azimuth_rad\n";
    for (double t : sc.ccm.times) {
        const orbitauth::EciState state = orbitauth::propagate(sc.alice, t);
        const orbitauth::TopocentricObservation obs =
            orbitauth::topocentric(sc.station, orbitauth::eci_to_ecef(state));
        using orbitauth::format_double;
        *out << format_double(t) << ',' << format_double(state.position.x) << ','
             << format_double(state.position.y) << ',' << format_double(state.position.z) << ','
             << format_double(state.velocity.x) << ',' << format_double(state.velocity.y) << ','
             << format_double(state.velocity.z) << ',' << format_double(obs.range) << ','
             << format_double(obs.range_rate) << ',' << format_double(obs.elevation) << ','
             << format_double(obs.azimuth) << '\n';
    }
}

void cmd_ccm(const CommonArgs& args) {
    const orbitauth::Scenario sc = orbitauth::materialize(load_or_default(args.config_path));
    if (args.out.empty()) {
        std::cout << orbitauth::to_json(sc.ccm).dump(2) << '\n';
    } else {
        orbitauth::save_ccm(sc.ccm, args.out);
    }
}

void cmd_run(const CommonArgs& args) {
    const orbitauth::ScenarioConfig cfg = load_or_default(args.config_path);
    const std::vector<std::size_t> ns = args.n_values.empty()
                                            ? std::vector<std::size_t>{1}
                                            : args.n_values;
    const std::string out_dir = args.out.empty() ? "out" : args.out;
    const orbitauth::RunManifest manifest =
        orbitauth::run_scenario(cfg, ns, args.trials, args.seed, out_dir, args.threads);
    std::cout << "wrote " << manifest.outputs.size() << " files to " << manifest.out_dir << '\n';
}

void cmd_preset(const CommonArgs& args, const std::string& name, double trudy_altitude_km) {
    const std::string out_dir = args.out.empty() ? name : args.out;
    const orbitauth::RunManifest manifest = orbitauth::run_scenario_preset(
        name, trudy_altitude_km, args.n_values, args.trials, args.seed, out_dir, args.threads);
    std::cout << "wrote " << manifest.outputs.size() << " files to " << manifest.out_dir << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trajectory-based physical-layer authentication simulator for LEO satellites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", orbitauth::kVersion);

    CommonArgs args;
    std::string preset_name;
    double trudy_altitude_km = 1200.0;

    auto add_common = [&args](CLI::App* cmd, bool with_mc) {
        cmd->add_option("--config", args.config_path, "Scenario configuration JSON");
        cmd->add_option("--out", args.out, "Output file or directory");
        if (with_mc) {
            cmd->add_option("--seed", args.seed, "Master seed for the Monte Carlo streams");
            cmd->add_option("--trials", args.trials, "Monte Carlo trials per population")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--n", args.n_values, "Challenge sizes to sweep")
                ->delimiter(',')
                ->check(CLI::PositiveNumber);
            cmd->add_option("--threads", args.threads, "Worker threads (0 = hardware)");
        }
    };

    CLI::App* propagate = app.add_subcommand("propagate", "Tabulate the claimed pass as CSV");
    add_common(propagate, false);
    CLI::App* ccm = app.add_subcommand("ccm", "Emit the reference matrix as JSON");
    add_common(ccm, false);
    CLI::App* run = app.add_subcommand("run", "DEP sweep for a configured scenario");
    add_common(run, true);
    CLI::App* preset = app.add_subcommand("preset", "DEP sweep for a named case-study scenario");
    preset->add_option("name", preset_name, "scenario-1 | scenario-2 | scenario-3")->required();
    preset->add_option("--trudy-altitude-km", trudy_altitude_km, "Attacker orbit altitude [km]")
        ->check(CLI::PositiveNumber);
    add_common(preset, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (propagate->parsed()) cmd_propagate(args);
        if (ccm->parsed()) cmd_ccm(args);
        if (run->parsed()) cmd_run(args);
        if (preset->parsed()) cmd_preset(args, preset_name, trudy_altitude_km);
        return 0;
    } catch (const orbitauth::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
