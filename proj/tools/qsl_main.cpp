#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qsl/scenario.hpp"

namespace {

int run_guarded(int (*fn)(const qsl::ScenarioConfig&), const std::string& config_path) {
    try {
        const qsl::ScenarioConfig cfg = qsl::parse_config_file(config_path);
        return fn(cfg);
    } catch (const qsl::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int validate(const std::string& config_path) {
    try {
        const qsl::ScenarioConfig cfg = qsl::parse_config_file(config_path);
        const qsl::AssembledScenario sc = qsl::assemble(cfg);
        std::printf("ok: scenario '%s', %d qubit(s), %zu grid points, source %s\n",
                    sc.tag.c_str(), sc.ket0.n_qubits(), cfg.grid().size(),
                    qsl::to_string(cfg.source_kind).c_str());
        return 0;
    } catch (const qsl::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dephasing speed-limit laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    auto* traj = app.add_subcommand("trajectory", "Compute bounds along a propagation grid");
    traj->add_option("config", config_path, "scenario config file")->required();

    auto* exper = app.add_subcommand("experiment", "Run the virtual tomography experiment");
    exper->add_option("config", config_path, "scenario config file")->required();

    std::string kind = "product";
    int n_max = 4;
    std::string sweep_out = "out/sweep";
    auto* sweep = app.add_subcommand("sweep-n", "Scale the photon number for a fixed family");
    sweep->add_option("--kind", kind, "state family: product or ghz");
    sweep->add_option("--n-max", n_max, "largest photon number")->check(CLI::Range(1, 8));
    sweep->add_option("--out", sweep_out, "output directory");

    auto* val = app.add_subcommand("validate", "Parse and assemble a config without running");
    val->add_option("config", config_path, "scenario config file")->required();

    CLI11_PARSE(app, argc, argv);

    if (traj->parsed()) return run_guarded(qsl::run_trajectory, config_path);
    if (exper->parsed()) return run_guarded(qsl::run_virtual_experiment, config_path);
    if (val->parsed()) return validate(config_path);
    if (sweep->parsed()) {
        try {
            return qsl::run_sweep(kind, n_max, sweep_out);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
    }
    return 1;
}
