#include "qsl/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kFwhmToSigma = 1.0 / (2.0 * std::sqrt(2.0 * std::log(2.0)));

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

Eigen::VectorXi coherence_label(Eigen::Index i, Eigen::Index j, int n) {
    Eigen::VectorXi k(n);
    for (int x = 0; x < n; ++x) k(x) = qubit_bit(j, x, n) - qubit_bit(i, x, n);
    return k;
}

// Principal axes of the covariance: node tuples live along the eigenvectors,
// so correlated pairs are sampled in their (sum, difference) modes.
struct NodeBasis {
    Eigen::MatrixXd directions;  // column a = sqrt(2 * lambda_a) * v_a
    int n_axes = 0;
};

NodeBasis principal_axes(const SpectralModel& m) {
    NodeBasis nb;
    if (m.kind == SpectralKind::monochromatic) return nb;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.rel_cov);
    require(es.info() == Eigen::Success, "covariance eigensolver failed");
    nb.n_axes = static_cast<int>(m.rel_cov.rows());
    nb.directions.resize(nb.n_axes, nb.n_axes);
    for (int a = 0; a < nb.n_axes; ++a) {
        const double lam = std::max(es.eigenvalues()(a), 0.0);
        nb.directions.col(a) = std::sqrt(2.0 * lam) * es.eigenvectors().col(a);
    }
    return nb;
}

Eigen::Matrix2cd hadamard2() {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

// Conditional single-photon unitary for one segment at relative frequency u:
// phase +/- pi*u*length on H/V for axis z, the same generator rotated into
// the |+-> basis for axis x.
Eigen::Matrix2cd segment_unitary(const SegmentSpec& seg, double u) {
    const double phase = kPi * u * seg.length_lambda;
    Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
    d(0, 0) = std::polar(1.0, phase);
    d(1, 1) = std::polar(1.0, -phase);
    if (seg.axis == 'z') return d;
    if (seg.axis == 'x') {
        static const Eigen::Matrix2cd h = hadamard2();
        return h * d * h;
    }
    throw std::runtime_error(std::string("unknown segment axis '") + seg.axis + "'");
}

}  // namespace

std::string to_string(SpectralKind k) {
    switch (k) {
        case SpectralKind::monochromatic: return "monochromatic";
        case SpectralKind::decorrelated: return "decorrelated";
        case SpectralKind::correlated: return "correlated";
    }
    return "?";
}

SpectralKind spectral_kind_from_string(const std::string& s) {
    if (s == "monochromatic") return SpectralKind::monochromatic;
    if (s == "decorrelated") return SpectralKind::decorrelated;
    if (s == "correlated") return SpectralKind::correlated;
    throw std::runtime_error("unknown spectral kind '" + s + "'");
}

void SpectralModel::check() const {
    require(n_photons >= 1 && n_photons <= 8, "photon count out of range");
    require(rel_mean.size() == n_photons && rel_cov.rows() == n_photons &&
                rel_cov.cols() == n_photons,
            "spectral model dimensions inconsistent");
    require((rel_cov - rel_cov.transpose()).cwiseAbs().maxCoeff() <= 1e-15,
            "covariance not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rel_cov, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -1e-15, "covariance not positive semidefinite");
    if (kind == SpectralKind::monochromatic)
        require(rel_cov.cwiseAbs().maxCoeff() == 0.0, "monochromatic model must have zero covariance");
    if (kind == SpectralKind::correlated)
        require(std::abs(Eigen::VectorXd::Ones(n_photons).transpose() * rel_cov *
                             Eigen::VectorXd::Ones(n_photons) -
                         pump_sum_var) <= 1e-15,
                "correlated model lost its pump sum-variance");
}

SpectralModel model_from_optics(SpectralKind kind, double center_nm, double filter_fwhm_nm,
                                std::optional<double> pump_fwhm_nm, int n) {
    require(n >= 1 && n <= 8, "photon count out of range");
    require(center_nm > 0, "center wavelength must be positive");
    SpectralModel m;
    m.n_photons = n;
    m.center_nm = center_nm;
    m.kind = kind;
    m.rel_mean = Eigen::VectorXd::Ones(n);
    m.rel_cov = Eigen::MatrixXd::Zero(n, n);
    if (kind == SpectralKind::monochromatic) {
        m.check();
        return m;
    }
    require(filter_fwhm_nm > 0, "filter FWHM must be positive");
    const double sigma_r = (filter_fwhm_nm / center_nm) * kFwhmToSigma;
    m.rel_cov = sigma_r * sigma_r * Eigen::MatrixXd::Identity(n, n);
    if (kind == SpectralKind::correlated) {
        require(n == 2, "correlated kind is restricted to photon pairs");
        require(pump_fwhm_nm.has_value() && *pump_fwhm_nm > 0,
                "correlated kind needs a positive pump FWHM");
        const double pump_center = center_nm / 2.0;
        const double s_sum = 2.0 * (*pump_fwhm_nm / pump_center) * kFwhmToSigma;
        m.pump_sum_var = s_sum * s_sum;
        const double off = (m.pump_sum_var - 2.0 * sigma_r * sigma_r) / 2.0;
        m.rel_cov(0, 1) = off;
        m.rel_cov(1, 0) = off;
    }
    m.check();
    return m;
}

Cplx characteristic_function(const SpectralModel& m, const Eigen::VectorXd& t) {
    require(t.size() == m.n_photons, "characteristic_function: wrong t length");
    const double phase = t.sum();  // rel_mean is all ones
    const double damp = 0.5 * (t.transpose() * m.rel_cov * t).value();
    return std::polar(std::exp(-damp), phase);
}

Cplx dephasing_factor(const SpectralModel& m, const Eigen::VectorXi& k, double l) {
    require(k.size() == m.n_photons, "dephasing_factor: wrong k length");
    require(std::isfinite(l), "dephasing_factor: l must be finite");
    return characteristic_function(m, kTwoPi * l * k.cast<double>());
}

DensityMatrix evolve_dephasing(const DensityMatrix& rho0, const SpectralModel& m, double l) {
    const int n = rho0.n_qubits();
    require(n == m.n_photons, "evolve_dephasing: photon count mismatch");
    const Eigen::Index dim = rho0.entries.rows();
    Mat out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            out(i, j) = dephasing_factor(m, coherence_label(i, j, n), l) * rho0.entries(i, j);
    return {out};
}

const GaussHermite& gauss_hermite(int n) {
    static std::map<int, GaussHermite> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    require(n >= 1, "gauss_hermite: need at least one node");
    // Golub-Welsch on the Jacobi matrix of the physicists' Hermite weight.
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = std::sqrt(i / 2.0);
        j(i, i - 1) = b;
        j(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    require(es.info() == Eigen::Success, "Gauss-Hermite eigensolver failed");
    GaussHermite gh;
    gh.nodes = es.eigenvalues();
    gh.weights = es.eigenvectors().row(0).transpose().cwiseAbs2();  // sums to 1
    return cache.emplace(n, std::move(gh)).first->second;
}

namespace {

// Shared node iteration: calls sink(weight, omega) in ascending tuple order.
template <typename Sink>
void for_each_node(const SpectralModel& m, int nodes_per_axis, Sink&& sink) {
    if (m.kind == SpectralKind::monochromatic) {
        sink(1.0, Eigen::VectorXd(m.rel_mean));
        return;
    }
    const NodeBasis nb = principal_axes(m);
    const GaussHermite& gh = gauss_hermite(nodes_per_axis);
    const int n = nb.n_axes;
    std::vector<int> idx(n, 0);
    Eigen::VectorXd omega(n);
    while (true) {
        double w = 1.0;
        omega = m.rel_mean;
        for (int a = 0; a < n; ++a) {
            w *= gh.weights(idx[a]);
            omega += gh.nodes(idx[a]) * nb.directions.col(a);
        }
        sink(w, omega);
        int a = n - 1;
        for (; a >= 0; --a) {
            if (++idx[a] < nodes_per_axis) break;
            idx[a] = 0;
        }
        if (a < 0) break;
    }
}

DensityMatrix evolve_grid_impl(const Mat* rho0, const CVec* ket0, const SpectralModel& m,
                               const std::vector<SegmentSpec>& segments, int nodes_per_axis) {
    require(nodes_per_axis >= kMinNodesPerAxis,
            "evolve_grid: node count below the minimum of 16 per axis");
    const int n = m.n_photons;
    const Eigen::Index dim = Eigen::Index{1} << n;
    require((rho0 && rho0->rows() == dim) || (ket0 && ket0->size() == dim),
            "evolve_grid: state dimension does not match the spectral model");

    Mat acc = Mat::Zero(dim, dim);
    std::vector<Eigen::Matrix2cd> photon_u(n);
    for_each_node(m, nodes_per_axis, [&](double w, const Eigen::VectorXd& omega) {
        for (int p = 0; p < n; ++p) {
            Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
            for (const auto& seg : segments) u = segment_unitary(seg, omega(p)) * u;
            photon_u[p] = u;
        }
        Mat full = photon_u[0];
        for (int p = 1; p < n; ++p) full = kron(full, Mat(photon_u[p]));
        if (ket0) {
            const CVec psi = full * (*ket0);
            acc.noalias() += w * (psi * psi.adjoint());
        } else {
            acc.noalias() += w * (full * (*rho0) * full.adjoint());
        }
    });
    acc = (acc + acc.adjoint()) / 2.0;
    return {acc};
}

}  // namespace

DensityMatrix evolve_grid(const Ket& ket0, const SpectralModel& m,
                          const std::vector<SegmentSpec>& segments, int nodes_per_axis) {
    return evolve_grid_impl(nullptr, &ket0.amplitudes, m, segments, nodes_per_axis);
}

DensityMatrix evolve_grid(const DensityMatrix& rho0, const SpectralModel& m,
                          const std::vector<SegmentSpec>& segments, int nodes_per_axis) {
    return evolve_grid_impl(&rho0.entries, nullptr, m, segments, nodes_per_axis);
}

Cplx quadrature_oracle_gamma(const SpectralModel& m, const Eigen::VectorXi& k, double l,
                             int nodes_per_axis) {
    require(nodes_per_axis >= 32, "quadrature_oracle_gamma: need at least 32 nodes per axis");
    require(k.size() == m.n_photons, "quadrature_oracle_gamma: wrong k length");
    Cplx acc = 0.0;
    for_each_node(m, nodes_per_axis, [&](double w, const Eigen::VectorXd& omega) {
        acc += w * std::polar(1.0, kTwoPi * l * k.cast<double>().dot(omega));
    });
    return acc;
}

DensityMatrix Evolution::at(double l) const {
    if (z_only()) return evolve_dephasing(rho0, model, l);
    std::vector<SegmentSpec> segs;
    segs.reserve(suffix.size() + 1);
    segs.push_back({'z', l});
    segs.insert(segs.end(), suffix.begin(), suffix.end());
    return evolve_grid(rho0, model, segs, nodes_per_axis);
}

Mat rho_dot(const Evolution& evo, double l, DerivMethod method) {
    if (method == DerivMethod::analytic) {
        require(evo.z_only(), "analytic rho_dot requires a pure-dephasing (z-only) scenario");
        const int n = evo.model.n_photons;
        const Eigen::Index dim = evo.rho0.entries.rows();
        Mat out(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                const Eigen::VectorXi k = coherence_label(i, j, n);
                const Eigen::VectorXd kd = k.cast<double>();
                const Cplx gamma = dephasing_factor(evo.model, k, l);
                const double quad = (kd.transpose() * evo.model.rel_cov * kd).value();
                const Cplx rate(-kTwoPi * kTwoPi * quad * l, kTwoPi * kd.sum());
                out(i, j) = rate * gamma * evo.rho0.entries(i, j);
            }
        }
        return out;
    }
    const double h = kStencilStep;
    const Mat f1 = evo.at(l + h).entries - evo.at(l - h).entries;
    const Mat f2 = evo.at(l + 2 * h).entries - evo.at(l - 2 * h).entries;
    Mat out = (8.0 * f1 - f2) / (12.0 * h);
    out = (out + out.adjoint()) / 2.0;
    return out;
}

}  // namespace qsl
