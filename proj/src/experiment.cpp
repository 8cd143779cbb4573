#include "qsl/experiment.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qsl/parallel.hpp"
#include "qsl/rng.hpp"

namespace qsl {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

int pow_int(int base, int exp) {
    int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// Single-qubit Pauli eigenstates, order x+, x-, y+, y-, z+, z-.
const std::array<CVec, 6>& single_qubit_eigenstates() {
    static const std::array<CVec, 6> states = [] {
        const double s = 1.0 / std::sqrt(2.0);
        std::array<CVec, 6> out;
        for (auto& v : out) v.resize(2);
        out[0] << s, s;
        out[1] << s, -s;
        out[2] << s, Cplx(0, 1) * s;
        out[3] << s, Cplx(0, -1) * s;
        out[4] << 1, 0;
        out[5] << 0, 1;
        return out;
    }();
    return states;
}

const char* kSettingNames[6] = {"x+", "x-", "y+", "y-", "z+", "z-"};

// Cached least-squares inversion: frequencies -> Pauli components of rho.
// Row r of the design matrix holds Tr[Pi_r P_alpha] / 2^n over the 4^n Pauli
// strings, so s = pinv * freqs and rho = sum_alpha s_alpha P_alpha / 2^n.
struct Design {
    Eigen::MatrixXd pinv;          // 4^n x 6^n
    std::vector<Mat> pauli_strings;  // 4^n matrices
};

const Design& design_for(int n) {
    static std::map<int, Design> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int n_settings = pow_int(6, n);
    const int n_pauli = pow_int(4, n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    const char axes[4] = {'i', 'x', 'y', 'z'};

    Design d;
    d.pauli_strings.reserve(n_pauli);
    for (int alpha = 0; alpha < n_pauli; ++alpha) {
        Mat p = Mat::Identity(1, 1);
        int rest = alpha;
        int div = n_pauli / 4;
        for (int q = 0; q < n; ++q) {
            p = kron(p, pauli(axes[rest / div]).entries);
            rest %= div;
            div /= 4;
        }
        d.pauli_strings.push_back(std::move(p));
    }

    const auto settings = tomography_settings(n);
    Eigen::MatrixXd design(n_settings, n_pauli);
    for (int r = 0; r < n_settings; ++r)
        for (int alpha = 0; alpha < n_pauli; ++alpha)
            design(r, alpha) =
                (settings[r].entries * d.pauli_strings[alpha]).trace().real() / double(dim);
    d.pinv = design.completeOrthogonalDecomposition().pseudoInverse();
    return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

void ExperimentConfig::check() const {
    require(resamples >= 1, "experiment: resamples must be >= 1");
    require(delta_l > 0, "experiment: delta_l must be positive");
    require(rate_hz * integration_s >= 1.0, "experiment: expected counts below 1");
    require(prep_infidelity >= 0.0 && prep_infidelity < 1.0,
            "experiment: prep_infidelity must lie in [0, 1)");
}

std::vector<Operator> tomography_settings(int n) {
    require(n >= 1 && n <= 4, "tomography_settings: n must be in [1, 4]");
    const auto& single = single_qubit_eigenstates();
    const int count = pow_int(6, n);
    std::vector<Operator> out;
    out.reserve(count);
    for (int idx = 0; idx < count; ++idx) {
        CVec v = CVec::Ones(1);
        int rest = idx;
        int div = count / 6;
        for (int q = 0; q < n; ++q) {
            const CVec& s = single[rest / div];
            CVec next(v.size() * 2);
            for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * 2, 2) = v(i) * s;
            v = std::move(next);
            rest %= div;
            div /= 6;
        }
        out.push_back({v * v.adjoint(), true});
    }
    return out;
}

std::vector<std::string> tomography_setting_labels(int n) {
    require(n >= 1 && n <= 4, "tomography_setting_labels: n must be in [1, 4]");
    const int count = pow_int(6, n);
    std::vector<std::string> out;
    out.reserve(count);
    for (int idx = 0; idx < count; ++idx) {
        std::string label;
        int rest = idx;
        int div = count / 6;
        for (int q = 0; q < n; ++q) {
            label += kSettingNames[rest / div];
            rest %= div;
            div /= 6;
        }
        out.push_back(label);
    }
    return out;
}

TomographyDataset simulate_counts(const DensityMatrix& rho, const ExperimentConfig& cfg,
                                  double l, const std::string& truth_tag) {
    cfg.check();
    const int n = rho.n_qubits();
    const auto settings = tomography_settings(n);
    TomographyDataset ds;
    ds.l = l;
    ds.n_qubits = n;
    ds.setting_labels = tomography_setting_labels(n);
    ds.truth_tag = truth_tag;
    ds.counts.resize(settings.size());
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const double p = std::max((rho.entries * settings[i].entries).trace().real(), 0.0);
        rng::Stream stream(cfg.master_seed, rng::kPurposeCounts, l, 0, i);
        ds.counts[i] = rng::poisson(stream, cfg.rate_hz * cfg.integration_s * p);
    }
    return ds;
}

std::vector<double> normalized_frequencies(const TomographyDataset& ds) {
    const int n = ds.n_qubits;
    const int n_settings = pow_int(6, n);
    require(static_cast<int>(ds.counts.size()) == n_settings, "dataset has wrong setting count");
    const int outcomes = 1 << n;

    // Setting index digits: basis b in {x,y,z} and outcome o in {+,-} per
    // qubit; settings of one basis combination form a complete measurement.
    std::vector<double> freqs(n_settings, 0.0);
    const int n_bases = pow_int(3, n);
    for (int basis = 0; basis < n_bases; ++basis) {
        long long total = 0;
        std::vector<int> members(outcomes);
        for (int o = 0; o < outcomes; ++o) {
            int idx = 0;
            int b_rest = basis;
            int b_div = n_bases / 3;
            for (int q = 0; q < n; ++q) {
                const int b_digit = b_rest / b_div;
                const int o_digit = (o >> (n - 1 - q)) & 1;
                idx = idx * 6 + b_digit * 2 + o_digit;
                b_rest %= b_div;
                b_div /= 3;
            }
            members[o] = idx;
            total += ds.counts[idx];
        }
        if (total <= 0) continue;  // empty group: leave frequencies at zero
        for (int o = 0; o < outcomes; ++o)
            freqs[members[o]] = static_cast<double>(ds.counts[members[o]]) / total;
    }
    return freqs;
}

DensityMatrix reconstruct_from_frequencies(int n, const std::vector<double>& freqs) {
    const Design& d = design_for(n);
    require(static_cast<int>(freqs.size()) == pow_int(6, n),
            "reconstruct_from_frequencies: wrong frequency count");
    const Eigen::Map<const Eigen::VectorXd> f(freqs.data(), freqs.size());
    const Eigen::VectorXd s = d.pinv * f;

    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat rho = Mat::Zero(dim, dim);
    for (int alpha = 0; alpha < static_cast<int>(d.pauli_strings.size()); ++alpha)
        rho += s(alpha) * d.pauli_strings[alpha];
    rho /= double(dim);
    rho = (rho + rho.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    require(es.info() == Eigen::Success, "reconstruction eigensolver failed");
    const Eigen::VectorXd p = es.eigenvalues().cwiseMax(0.0);
    const double tr = p.sum();
    require(tr > 0, "reconstruction produced a zero state");
    rho = es.eigenvectors() * (p / tr).asDiagonal() * es.eigenvectors().adjoint();
    return {rho};
}

DensityMatrix reconstruct_state(const TomographyDataset& ds) {
    return reconstruct_from_frequencies(ds.n_qubits, normalized_frequencies(ds));
}

std::vector<double> resampled_observable(const TomographyDataset& ds, const Operator& a_obs,
                                         const ExperimentConfig& cfg) {
    cfg.check();
    const int r_total = cfg.resamples;
    std::vector<double> values(r_total);
    parallel_for(r_total, [&](std::size_t slot) {
        const uint64_t r = slot + 1;
        TomographyDataset redraw = ds;
        for (std::size_t i = 0; i < ds.counts.size(); ++i) {
            rng::Stream stream(cfg.master_seed, rng::kPurposeResample, ds.l, r, i);
            redraw.counts[i] = rng::poisson(stream, static_cast<double>(ds.counts[i]));
        }
        values[slot] = expectation(reconstruct_state(redraw), a_obs);
    });
    return values;
}

namespace {

std::pair<double, double> mean_and_sample_std(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

SpeedEstimate mc_speed(const TomographyDataset& at_minus, const TomographyDataset& at_center,
                       const TomographyDataset& at_plus, const Operator& a_obs,
                       const ExperimentConfig& cfg) {
    cfg.check();
    require(at_minus.n_qubits == at_center.n_qubits && at_center.n_qubits == at_plus.n_qubits,
            "mc_speed: datasets have different sizes");
    const double spacing_lo = at_center.l - at_minus.l;
    const double spacing_hi = at_plus.l - at_center.l;
    require(std::abs(spacing_lo - cfg.delta_l) <= 1e-9 && std::abs(spacing_hi - cfg.delta_l) <= 1e-9,
            "mc_speed: dataset spacing does not match delta_l");

    const auto a_minus = resampled_observable(at_minus, a_obs, cfg);
    const auto a_center = resampled_observable(at_center, a_obs, cfg);
    const auto a_plus = resampled_observable(at_plus, a_obs, cfg);

    std::vector<double> speeds(cfg.resamples);
    for (int r = 0; r < cfg.resamples; ++r)
        speeds[r] = std::abs(a_plus[r] - a_minus[r]) / (2.0 * cfg.delta_l);

    SpeedEstimate est;
    est.l = at_center.l;
    std::tie(est.a_mean, est.a_std) = mean_and_sample_std(a_center);
    std::tie(est.speed_mean, est.speed_std) = mean_and_sample_std(speeds);
    return est;
}

DensityMatrix degrade_preparation(const Ket& ket, double prep_infidelity) {
    require(prep_infidelity >= 0.0 && prep_infidelity < 1.0,
            "prep_infidelity must lie in [0, 1)");
    ket.check();
    const Eigen::Index dim = ket.amplitudes.size();
    Mat rho = (1.0 - prep_infidelity) * (ket.amplitudes * ket.amplitudes.adjoint());
    rho += (prep_infidelity / static_cast<double>(dim)) * Mat::Identity(dim, dim);
    return {rho};
}

}  // namespace qsl
