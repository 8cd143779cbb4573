#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsl/bounds.hpp"
#include "qsl/core.hpp"
#include "qsl/experiment.hpp"
#include "qsl/spectral.hpp"

namespace qsl {

// Config-file problems carry the offending line for exit-code-2 reporting.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(line > 0 ? file + ":" + std::to_string(line) + ": " + msg
                                      : file + ": " + msg) {}
};

// Numerical-invariant breaches (sandwich violations) map to exit code 3.
struct NumericViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::string config_path;
    std::string name;

    StateSpec state;

    SpectralKind source_kind = SpectralKind::decorrelated;
    double center_nm = 808.0;
    double filter_fwhm_nm = 12.0;
    std::optional<double> pump_fwhm_nm;

    double l_start = 0.0;
    double l_stop = 1.0;
    double l_step = 0.025;

    bool noise_enabled = false;
    char noise_axis = 'x';
    double noise_length_lambda = 120.0;

    bool observable_is_initial_projector = true;
    std::string observable_file;

    std::optional<ExperimentConfig> experiment;

    int quadrature_nodes = kDefaultNodesPerAxis;
    std::optional<double> reference_measured_max;

    std::string output_dir = "out";

    std::vector<double> grid() const;
};

// Flat dotted key=value format, '#' comments, one assignment per line.
ScenarioConfig parse_config_file(const std::string& path);

// Assembled pieces of a runnable scenario.
struct AssembledScenario {
    Ket ket0;
    Evolution evolution;   // rho0 is the (possibly degraded) initial state
    Operator observable;
    std::optional<Operator> hamiltonian;  // unitary families only
    DerivMethod deriv;
    std::string tag;
};

AssembledScenario assemble(const ScenarioConfig& cfg, bool degrade_for_experiment = false);

struct TrajectoryResult {
    std::vector<BoundsRecord> records;
    double max_speed_value = 0.0;
    double max_speed_l = 0.0;
    int sandwich_violations = 0;
    double max_lower_gap = 0.0;  // max over grid of |a_dot| - lower
};

TrajectoryResult compute_trajectory(const AssembledScenario& sc, const std::vector<double>& grid);

std::string trajectory_csv(const std::vector<BoundsRecord>& records);
std::string summary_json(const ScenarioConfig& cfg, const AssembledScenario& sc,
                         const TrajectoryResult& tr,
                         const std::vector<SpeedEstimate>* estimates = nullptr);
std::string experiment_csv(const std::vector<SpeedEstimate>& estimates);

// Output directory after the QSL_OUTPUT_DIR override.
std::string effective_output_dir(const ScenarioConfig& cfg);

// CLI entry points; return process exit codes (0 ok, 3 numerical violation;
// config errors throw ConfigError before any work starts).
int run_trajectory(const ScenarioConfig& cfg);
int run_virtual_experiment(const ScenarioConfig& cfg);

struct SweepRow {
    int n = 0;
    double max_upper_bound = 0.0;
    double l_star_bound = 0.0;
    double max_speed = 0.0;
    double l_star_speed = 0.0;
};

// Monochromatic speed/bound scaling table for product or GHZ inputs.
std::vector<SweepRow> sweep_n(const std::string& kind, int n_max);
std::string sweep_csv(const std::string& kind, const std::vector<SweepRow>& rows);
int run_sweep(const std::string& kind, int n_max, const std::string& output_dir);

// Per-point speed estimates across the full grid; endpoints carry NaN speeds.
std::vector<SpeedEstimate> scan_experiment(const AssembledScenario& sc,
                                           const std::vector<double>& grid,
                                           const ExperimentConfig& cfg);

}  // namespace qsl
