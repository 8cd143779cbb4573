#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsl/core.hpp"

namespace qsl {

struct ExperimentConfig {
    double rate_hz = 13000.0;
    double integration_s = 5.0;
    double delta_l = 0.025;
    int resamples = 10000;
    uint64_t master_seed = 42;
    double prep_infidelity = 0.0;
    void check() const;
};

struct TomographyDataset {
    double l = 0.0;
    int n_qubits = 1;
    std::vector<std::string> setting_labels;  // 6^n entries
    std::vector<long long> counts;
    std::string truth_tag;
};

struct SpeedEstimate {
    double l = 0.0;
    double a_mean = 0.0;
    double a_std = 0.0;
    double speed_mean = 0.0;
    double speed_std = 0.0;
};

// The 6^n tensor products of single-qubit Pauli eigenstate projectors, per
// qubit in the order x+, x-, y+, y-, z+, z-; qubit 0 varies slowest.
std::vector<Operator> tomography_settings(int n);
std::vector<std::string> tomography_setting_labels(int n);

// Poisson counts with mean rate*T*Tr[rho Pi], keyed by (seed, l, setting) so
// datasets are reproducible in any evaluation order.
TomographyDataset simulate_counts(const DensityMatrix& rho, const ExperimentConfig& cfg,
                                  double l, const std::string& truth_tag = "");

// Linear least-squares inversion of projector frequencies (per-basis
// normalized), then eigenvalue clipping at zero and trace renormalization.
DensityMatrix reconstruct_from_frequencies(int n, const std::vector<double>& freqs);
DensityMatrix reconstruct_state(const TomographyDataset& ds);

// Per-basis normalized frequencies of a dataset (each 2^n outcome group of a
// basis combination sums to one).
std::vector<double> normalized_frequencies(const TomographyDataset& ds);

// Parametric bootstrap: every resample redraws each count as Poisson around
// the recorded value (streams keyed by seed, resample, l, setting),
// reconstructs the three states and takes the central difference
// |a(l+dl) - a(l-dl)| / (2 dl). Means and sample standard deviations are
// taken across resamples.
SpeedEstimate mc_speed(const TomographyDataset& at_minus, const TomographyDataset& at_center,
                       const TomographyDataset& at_plus, const Operator& a_obs,
                       const ExperimentConfig& cfg);

// Resampled observable values for one dataset, resample indices 1..resamples;
// mc_speed is a fixed-order reduction of these, so scanning runners can share
// the exact same draws.
std::vector<double> resampled_observable(const TomographyDataset& ds, const Operator& a_obs,
                                         const ExperimentConfig& cfg);

// (1 - eps) |psi><psi| + eps I / 2^N.
DensityMatrix degrade_preparation(const Ket& ket, double prep_infidelity);

}  // namespace qsl
