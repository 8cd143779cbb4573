#include "qsl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qsl/csvio.hpp"
#include "qsl/parallel.hpp"

namespace qsl {

namespace {

struct RawConfig {
    std::string path;
    // key -> (value, line number); insertion order kept for error reporting.
    std::map<std::string, std::pair<std::string, int>> entries;
    mutable std::vector<std::string> consumed;

    bool has(const std::string& key) const { return entries.count(key) != 0; }

    const std::pair<std::string, int>* find(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) return nullptr;
        consumed.push_back(key);
        return &it->second;
    }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

RawConfig read_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    RawConfig raw;
    raw.path = path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path, lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(path, lineno, "empty key");
        if (raw.entries.count(key))
            throw ConfigError(path, lineno, "duplicate key '" + key + "'");
        raw.entries[key] = {value, lineno};
    }
    return raw;
}

std::string get_string(const RawConfig& raw, const std::string& key, const std::string& fallback) {
    const auto* e = raw.find(key);
    return e ? e->first : fallback;
}

std::string get_required(const RawConfig& raw, const std::string& key) {
    const auto* e = raw.find(key);
    if (!e) throw ConfigError(raw.path, 0, "missing required key '" + key + "'");
    return e->first;
}

double parse_double(const RawConfig& raw, const std::string& key, const std::string& text,
                    int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(raw.path, line, key + ": cannot parse '" + text + "' as a number");
    }
}

double get_double(const RawConfig& raw, const std::string& key, double fallback) {
    const auto* e = raw.find(key);
    return e ? parse_double(raw, key, e->first, e->second) : fallback;
}

std::optional<double> get_optional_double(const RawConfig& raw, const std::string& key) {
    const auto* e = raw.find(key);
    if (!e) return std::nullopt;
    return parse_double(raw, key, e->first, e->second);
}

int get_int(const RawConfig& raw, const std::string& key, int fallback) {
    const auto* e = raw.find(key);
    if (!e) return fallback;
    const double v = parse_double(raw, key, e->first, e->second);
    if (v != std::floor(v))
        throw ConfigError(raw.path, e->second, key + ": expected an integer");
    return static_cast<int>(v);
}

uint64_t get_u64(const RawConfig& raw, const std::string& key, uint64_t fallback) {
    const auto* e = raw.find(key);
    if (!e) return fallback;
    try {
        return std::stoull(e->first);
    } catch (const std::exception&) {
        throw ConfigError(raw.path, e->second, key + ": expected a non-negative integer");
    }
}

bool get_bool(const RawConfig& raw, const std::string& key, bool fallback) {
    const auto* e = raw.find(key);
    if (!e) return fallback;
    if (e->first == "true") return true;
    if (e->first == "false") return false;
    throw ConfigError(raw.path, e->second, key + ": expected true or false");
}

int line_of(const RawConfig& raw, const std::string& key) {
    auto it = raw.entries.find(key);
    return it == raw.entries.end() ? 0 : it->second.second;
}

std::vector<Cplx> parse_amplitudes(const RawConfig& raw, const std::string& text, int line) {
    std::vector<Cplx> amps;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        const auto colon = token.find(':');
        try {
            if (colon == std::string::npos) {
                amps.emplace_back(std::stod(token), 0.0);
            } else {
                amps.emplace_back(std::stod(token.substr(0, colon)),
                                  std::stod(token.substr(colon + 1)));
            }
        } catch (const std::exception&) {
            throw ConfigError(raw.path, line,
                              "state.amplitudes: cannot parse '" + token + "' (use re or re:im)");
        }
    }
    if (amps.empty()) throw ConfigError(raw.path, line, "state.amplitudes: empty list");
    return amps;
}

Operator load_observable_file(const std::string& cfg_path, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError(cfg_path, 0, "observable.file: cannot open '" + file + "'");
    Eigen::Index dim = 0;
    in >> dim;
    if (dim < 2 || dim > kMaxDim)
        throw ConfigError(cfg_path, 0, "observable.file: bad dimension");
    Mat m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            std::string token;
            if (!(in >> token))
                throw ConfigError(cfg_path, 0, "observable.file: truncated matrix");
            const auto colon = token.find(':');
            try {
                if (colon == std::string::npos)
                    m(i, j) = Cplx(std::stod(token), 0.0);
                else
                    m(i, j) = Cplx(std::stod(token.substr(0, colon)),
                                   std::stod(token.substr(colon + 1)));
            } catch (const std::exception&) {
                throw ConfigError(cfg_path, 0, "observable.file: bad entry '" + token + "'");
            }
        }
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ConfigError(cfg_path, 0, "observable.file: matrix is not Hermitian");
    return {m, true};
}

constexpr const char* kTrajectoryHeader =
    "l,a,a_dot,a_dot_c,a_dot_i,lower,upper,b_ci_plus,b_ci_minus,b_ic_plus,b_ic_minus,"
    "mt,pure_upper,qfi_c,qfi_i,delta_ac,delta_ai,purity";

}  // namespace

std::vector<double> ScenarioConfig::grid() const {
    std::vector<double> g;
    const int steps = static_cast<int>(std::round((l_stop - l_start) / l_step));
    for (int i = 0; i <= steps; ++i) {
        const double l = l_start + i * l_step;
        if (l <= l_stop + 1e-12) g.push_back(l);
    }
    return g;
}

ScenarioConfig parse_config_file(const std::string& path) {
    const RawConfig raw = read_raw(path);
    ScenarioConfig cfg;
    cfg.config_path = path;

    cfg.state.name = get_required(raw, "state.name");
    cfg.state.n = get_int(raw, "state.n", 1);
    static const std::vector<std::string> known_states = {
        "plus", "plusN", "bell_phi_plus", "ghz", "P", "PN", "H", "V", "custom"};
    if (std::find(known_states.begin(), known_states.end(), cfg.state.name) == known_states.end())
        throw ConfigError(path, line_of(raw, "state.name"),
                          "state.name: unknown state '" + cfg.state.name + "'");
    if (const auto* e = raw.find("state.amplitudes")) {
        if (cfg.state.name != "custom")
            throw ConfigError(path, e->second, "state.amplitudes: only valid for state.name = custom");
        cfg.state.amplitudes = parse_amplitudes(raw, e->first, e->second);
    }

    cfg.name = get_string(raw, "scenario.name", cfg.state.name);

    const std::string kind = get_string(raw, "source.kind", "decorrelated");
    try {
        cfg.source_kind = spectral_kind_from_string(kind);
    } catch (const std::exception&) {
        throw ConfigError(path, line_of(raw, "source.kind"),
                          "source.kind: unknown kind '" + kind + "'");
    }
    cfg.center_nm = get_double(raw, "source.center_nm", 808.0);
    cfg.filter_fwhm_nm = get_double(raw, "source.filter_fwhm_nm", 12.0);
    cfg.pump_fwhm_nm = get_optional_double(raw, "source.pump_fwhm_nm");
    if (cfg.source_kind == SpectralKind::correlated && !cfg.pump_fwhm_nm)
        throw ConfigError(path, line_of(raw, "source.kind"),
                          "source.pump_fwhm_nm: required for the correlated kind");

    cfg.l_start = get_double(raw, "evolution.l_start", 0.0);
    cfg.l_stop = get_double(raw, "evolution.l_stop", 1.0);
    cfg.l_step = get_double(raw, "evolution.l_step", 0.025);
    if (cfg.l_step <= 0)
        throw ConfigError(path, line_of(raw, "evolution.l_step"),
                          "evolution.l_step: must be positive");
    if (cfg.l_start >= cfg.l_stop)
        throw ConfigError(path, line_of(raw, "evolution.l_stop"),
                          "evolution.l_stop: must exceed evolution.l_start");

    cfg.noise_enabled = get_bool(raw, "noise.enabled", false);
    const std::string axis = get_string(raw, "noise.axis", "x");
    if (axis != "x" && axis != "z")
        throw ConfigError(path, line_of(raw, "noise.axis"), "noise.axis: must be x or z");
    cfg.noise_axis = axis[0];
    cfg.noise_length_lambda = get_double(raw, "noise.length_lambda", 120.0);

    const std::string obs = get_string(raw, "observable.kind", "initial_state_projector");
    if (obs == "initial_state_projector") {
        cfg.observable_is_initial_projector = true;
    } else if (obs == "custom_file") {
        cfg.observable_is_initial_projector = false;
        cfg.observable_file = get_required(raw, "observable.file");
    } else {
        throw ConfigError(path, line_of(raw, "observable.kind"),
                          "observable.kind: must be initial_state_projector or custom_file");
    }

    const bool exp_enabled = get_bool(raw, "experiment.enabled", false);
    ExperimentConfig e;
    e.rate_hz = get_double(raw, "experiment.rate_hz", 13000.0);
    e.integration_s = get_double(raw, "experiment.integration_s", 5.0);
    e.delta_l = get_double(raw, "experiment.delta_l", cfg.l_step);
    e.resamples = get_int(raw, "experiment.resamples", 10000);
    e.master_seed = get_u64(raw, "experiment.master_seed", 42);
    e.prep_infidelity = get_double(raw, "experiment.prep_infidelity", 0.0);
    if (exp_enabled) {
        if (std::abs(e.delta_l - cfg.l_step) > 1e-12)
            throw ConfigError(path, line_of(raw, "experiment.delta_l"),
                              "experiment.delta_l: must equal evolution.l_step");
        try {
            e.check();
        } catch (const std::exception& ex) {
            throw ConfigError(path, 0, ex.what());
        }
        cfg.experiment = e;
    }

    cfg.quadrature_nodes = get_int(raw, "quadrature.nodes", kDefaultNodesPerAxis);
    if (cfg.quadrature_nodes < kMinNodesPerAxis)
        throw ConfigError(path, line_of(raw, "quadrature.nodes"),
                          "quadrature.nodes: minimum is 16 per axis");
    cfg.reference_measured_max = get_optional_double(raw, "reference.measured_max");
    cfg.output_dir = get_string(raw, "output.dir", "out/" + cfg.name);

    for (const auto& [key, value] : raw.entries) {
        if (std::find(raw.consumed.begin(), raw.consumed.end(), key) == raw.consumed.end())
            throw ConfigError(path, value.second, "unknown key '" + key + "'");
    }
    return cfg;
}

AssembledScenario assemble(const ScenarioConfig& cfg, bool degrade_for_experiment) {
    AssembledScenario sc;
    try {
        sc.ket0 = make_state(cfg.state);
    } catch (const std::exception& ex) {
        throw ConfigError(cfg.config_path, 0, std::string("state: ") + ex.what());
    }
    const int n = sc.ket0.n_qubits();

    SpectralModel model;
    try {
        model = model_from_optics(cfg.source_kind, cfg.center_nm, cfg.filter_fwhm_nm,
                                  cfg.pump_fwhm_nm, n);
    } catch (const std::exception& ex) {
        throw ConfigError(cfg.config_path, 0, std::string("source: ") + ex.what());
    }

    DensityMatrix rho0 = pure_density(sc.ket0);
    if (degrade_for_experiment && cfg.experiment && cfg.experiment->prep_infidelity > 0.0)
        rho0 = degrade_preparation(sc.ket0, cfg.experiment->prep_infidelity);

    sc.evolution.rho0 = std::move(rho0);
    sc.evolution.model = std::move(model);
    sc.evolution.nodes_per_axis = cfg.quadrature_nodes;
    if (cfg.noise_enabled)
        sc.evolution.suffix.push_back({cfg.noise_axis, cfg.noise_length_lambda});

    sc.observable = cfg.observable_is_initial_projector
                        ? projector(sc.ket0)
                        : load_observable_file(cfg.config_path, cfg.observable_file);
    if (sc.observable.entries.rows() != sc.evolution.rho0.entries.rows())
        throw ConfigError(cfg.config_path, 0, "observable dimension does not match the state");

    sc.deriv = sc.evolution.z_only() ? DerivMethod::analytic : DerivMethod::stencil;
    if (sc.evolution.z_only()) sc.hamiltonian = collective_hamiltonian(n);
    sc.tag = cfg.name;
    return sc;
}

TrajectoryResult compute_trajectory(const AssembledScenario& sc, const std::vector<double>& grid) {
    TrajectoryResult tr;
    tr.records.resize(grid.size());
    const Operator* h = sc.hamiltonian ? &*sc.hamiltonian : nullptr;
    parallel_for(grid.size(), [&](std::size_t i) {
        const double l = grid[i];
        const DensityMatrix rho = sc.evolution.at(l);
        const Mat rdot = rho_dot(sc.evolution, l, sc.deriv);
        BoundsRecord rec = bounds_at(rho, rdot, sc.observable, h);
        rec.l = l;
        tr.records[i] = rec;
    });

    for (const auto& r : tr.records) {
        const double speed = std::abs(r.a_dot);
        if (speed < r.lower - 1e-9 || speed > r.upper + 1e-9) ++tr.sandwich_violations;
        tr.max_lower_gap = std::max(tr.max_lower_gap, speed - r.lower);
    }

    const auto speed_of_l = [&](double l) {
        return std::abs((rho_dot(sc.evolution, l, sc.deriv) * sc.observable.entries)
                            .trace()
                            .real());
    };
    std::tie(tr.max_speed_l, tr.max_speed_value) = max_speed(tr.records, speed_of_l);
    return tr;
}

std::string trajectory_csv(const std::vector<BoundsRecord>& records) {
    std::string out = kTrajectoryHeader;
    out += '\n';
    for (const auto& r : records) {
        out += format_double(r.l);
        for (double v : {r.a, r.a_dot, r.a_dot_c, r.a_dot_i, r.lower, r.upper, r.b_ci_plus,
                         r.b_ci_minus, r.b_ic_plus, r.b_ic_minus})
            out += "," + format_double(v);
        out += "," + format_optional(r.mt);
        out += "," + format_optional(r.pure_upper);
        for (double v : {r.qfi_c, r.qfi_i, r.delta_ac, r.delta_ai, r.purity})
            out += "," + format_double(v);
        out += '\n';
    }
    return out;
}

std::string experiment_csv(const std::vector<SpeedEstimate>& estimates) {
    std::string out = "l,a_mean,a_std,speed_mean,speed_std\n";
    for (const auto& e : estimates) {
        out += format_double(e.l);
        for (double v : {e.a_mean, e.a_std, e.speed_mean, e.speed_std})
            out += "," + format_double(v);
        out += '\n';
    }
    return out;
}

std::string summary_json(const ScenarioConfig& cfg, const AssembledScenario& sc,
                         const TrajectoryResult& tr,
                         const std::vector<SpeedEstimate>* estimates) {
    nlohmann::ordered_json j;
    j["scenario"] = sc.tag;
    j["state"] = cfg.state.name;
    j["n_qubits"] = sc.ket0.n_qubits();
    j["source_kind"] = to_string(cfg.source_kind);
    j["noise"] = {{"enabled", cfg.noise_enabled},
                  {"axis", std::string(1, cfg.noise_axis)},
                  {"length_lambda", cfg.noise_length_lambda}};
    j["grid"] = {{"l_start", cfg.l_start}, {"l_stop", cfg.l_stop}, {"l_step", cfg.l_step}};
    j["max_speed"] = tr.max_speed_value;
    j["l_star"] = tr.max_speed_l;
    j["sandwich_violations"] = tr.sandwich_violations;
    j["max_lower_gap"] = tr.max_lower_gap;
    j["lower_bound_tight"] = tr.max_lower_gap < 0.1;
    if (cfg.reference_measured_max)
        j["reference_measured_max"] = *cfg.reference_measured_max;
    if (estimates) {
        const ExperimentConfig& e = *cfg.experiment;
        double best = 0.0, best_l = 0.0, best_std = 0.0;
        bool within = true;
        for (std::size_t i = 0; i < estimates->size(); ++i) {
            const auto& est = (*estimates)[i];
            if (std::isnan(est.speed_mean)) continue;
            if (est.speed_mean > best) {
                best = est.speed_mean;
                best_l = est.l;
                best_std = est.speed_std;
            }
            const auto& rec = tr.records[i];
            if (est.speed_mean < rec.lower - 3.0 * est.speed_std ||
                est.speed_mean > rec.upper + 3.0 * est.speed_std)
                within = false;
        }
        j["experiment"] = {{"rate_hz", e.rate_hz},
                           {"integration_s", e.integration_s},
                           {"delta_l", e.delta_l},
                           {"resamples", e.resamples},
                           {"master_seed", e.master_seed},
                           {"prep_infidelity", e.prep_infidelity},
                           {"estimated_max_speed", best},
                           {"estimated_max_speed_std", best_std},
                           {"estimated_max_l", best_l},
                           {"estimates_within_bounds_3sigma", within}};
    }
    return j.dump(2) + "\n";
}

std::string effective_output_dir(const ScenarioConfig& cfg) {
    if (const char* env = std::getenv("QSL_OUTPUT_DIR")) {
        if (*env) return env;
    }
    return cfg.output_dir;
}

int run_trajectory(const ScenarioConfig& cfg) {
    const AssembledScenario sc = assemble(cfg);
    const TrajectoryResult tr = compute_trajectory(sc, cfg.grid());
    const std::string dir = effective_output_dir(cfg);
    write_file_atomic(dir + "/trajectory.csv", trajectory_csv(tr.records));
    write_file_atomic(dir + "/summary.json", summary_json(cfg, sc, tr));
    return tr.sandwich_violations > 0 ? 3 : 0;
}

std::vector<SpeedEstimate> scan_experiment(const AssembledScenario& sc,
                                           const std::vector<double>& grid,
                                           const ExperimentConfig& cfg) {
    const std::size_t k = grid.size();
    std::vector<TomographyDataset> datasets(k);
    std::vector<std::vector<double>> a_vals(k);
    for (std::size_t i = 0; i < k; ++i) {
        datasets[i] = simulate_counts(sc.evolution.at(grid[i]), cfg, grid[i], sc.tag);
        a_vals[i] = resampled_observable(datasets[i], sc.observable, cfg);
    }

    auto stats = [](const std::vector<double>& xs) {
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= xs.size();
        double ss = 0.0;
        for (double x : xs) ss += (x - mean) * (x - mean);
        const double sd = xs.size() > 1 ? std::sqrt(ss / (xs.size() - 1.0)) : 0.0;
        return std::pair{mean, sd};
    };

    std::vector<SpeedEstimate> out(k);
    std::vector<double> speeds(cfg.resamples);
    for (std::size_t i = 0; i < k; ++i) {
        SpeedEstimate est;
        est.l = grid[i];
        std::tie(est.a_mean, est.a_std) = stats(a_vals[i]);
        if (i == 0 || i + 1 == k) {
            est.speed_mean = std::numeric_limits<double>::quiet_NaN();
            est.speed_std = std::numeric_limits<double>::quiet_NaN();
        } else {
            for (int r = 0; r < cfg.resamples; ++r)
                speeds[r] = std::abs(a_vals[i + 1][r] - a_vals[i - 1][r]) / (2.0 * cfg.delta_l);
            std::tie(est.speed_mean, est.speed_std) = stats(speeds);
        }
        out[i] = est;
    }
    return out;
}

int run_virtual_experiment(const ScenarioConfig& cfg) {
    if (!cfg.experiment)
        throw ConfigError(cfg.config_path, 0, "experiment.enabled: experiment block required");
    const AssembledScenario sc = assemble(cfg, /*degrade_for_experiment=*/true);
    const std::vector<double> grid = cfg.grid();
    const TrajectoryResult tr = compute_trajectory(sc, grid);
    const std::vector<SpeedEstimate> est = scan_experiment(sc, grid, *cfg.experiment);

    const std::string dir = effective_output_dir(cfg);
    write_file_atomic(dir + "/trajectory.csv", trajectory_csv(tr.records));
    write_file_atomic(dir + "/experiment.csv", experiment_csv(est));
    write_file_atomic(dir + "/summary.json", summary_json(cfg, sc, tr, &est));
    return tr.sandwich_violations > 0 ? 3 : 0;
}

std::vector<SweepRow> sweep_n(const std::string& kind, int n_max) {
    if (kind != "product" && kind != "ghz")
        throw std::runtime_error("sweep kind must be product or ghz");
    if (n_max < 1 || n_max > 8) throw std::runtime_error("sweep n_max must be in [1, 8]");

    std::vector<SweepRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        const Ket ket = make_state(kind == "product" ? "plusN" : "ghz", n);
        AssembledScenario sc;
        sc.ket0 = ket;
        sc.evolution.rho0 = pure_density(ket);
        sc.evolution.model =
            model_from_optics(SpectralKind::monochromatic, 808.0, 0.0, std::nullopt, n);
        sc.observable = projector(ket);
        sc.hamiltonian = collective_hamiltonian(n);
        sc.deriv = DerivMethod::analytic;
        sc.tag = kind + std::to_string(n);

        std::vector<double> grid;
        for (int i = 0; i <= 40; ++i) grid.push_back(i * 0.025);
        const TrajectoryResult tr = compute_trajectory(sc, grid);

        const auto bound_of_l = [&](double l) {
            const DensityMatrix rho = sc.evolution.at(l);
            const Mat rdot = rho_dot(sc.evolution, l, DerivMethod::analytic);
            return bounds_at(rho, rdot, sc.observable, &*sc.hamiltonian).b_ic_plus;
        };
        std::size_t best = 0;
        for (std::size_t i = 1; i < tr.records.size(); ++i)
            if (tr.records[i].b_ic_plus > tr.records[best].b_ic_plus) best = i;
        const double lo = tr.records[best > 0 ? best - 1 : 0].l;
        const double hi = tr.records[std::min(best + 1, tr.records.size() - 1)].l;
        const double l_bound = golden_max(bound_of_l, lo, hi, 1e-10);
        double bound_val = bound_of_l(l_bound);
        double l_bound_final = l_bound;
        if (tr.records[best].b_ic_plus > bound_val) {
            bound_val = tr.records[best].b_ic_plus;
            l_bound_final = tr.records[best].l;
        }

        SweepRow row;
        row.n = n;
        row.max_upper_bound = bound_val;
        row.l_star_bound = l_bound_final;
        row.max_speed = tr.max_speed_value;
        row.l_star_speed = tr.max_speed_l;
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::string& kind, const std::vector<SweepRow>& rows) {
    std::string out = "kind,n,max_upper_bound,l_star_bound,max_speed,l_star_speed\n";
    for (const auto& r : rows) {
        out += kind;
        out += "," + std::to_string(r.n);
        out += "," + format_double(r.max_upper_bound);
        out += "," + format_double(r.l_star_bound);
        out += "," + format_double(r.max_speed);
        out += "," + format_double(r.l_star_speed);
        out += '\n';
    }
    return out;
}

int run_sweep(const std::string& kind, int n_max, const std::string& output_dir) {
    const auto rows = sweep_n(kind, n_max);
    std::string dir = output_dir;
    if (const char* env = std::getenv("QSL_OUTPUT_DIR")) {
        if (*env) dir = env;
    }
    write_file_atomic(dir + "/sweep_" + kind + ".csv", sweep_csv(kind, rows));
    return 0;
}

}  // namespace qsl
