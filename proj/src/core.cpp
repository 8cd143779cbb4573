#include "qsl/core.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

// Largest-modulus component made real positive; first index wins ties.
void fix_phase(Mat& v, Eigen::Index col) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const double m = std::abs(v(i, col));
        if (m > best) {
            best = m;
            imax = i;
        }
    }
    if (best <= 0.0) return;
    const Cplx ph = std::conj(v(imax, col)) / best;
    v.col(col) *= ph;
}

}  // namespace

int qubit_count(Eigen::Index dim) {
    require(dim >= 2 && dim <= kMaxDim && (dim & (dim - 1)) == 0,
            "dimension must be a power of two in [2, 256], got " + std::to_string(dim));
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    return n;
}

void Ket::check() const {
    require(std::abs(amplitudes.norm() - 1.0) <= 1e-12, "ket is not normalized");
}

void DensityMatrix::check() const {
    require(entries.rows() == entries.cols(), "density matrix is not square");
    require((entries - entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-12,
            "density matrix is not Hermitian");
    require(std::abs(entries.trace().real() - 1.0) <= 1e-12 &&
                std::abs(entries.trace().imag()) <= 1e-12,
            "density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Mat> es(entries, Eigen::EigenvaluesOnly);
    require(es.info() == Eigen::Success, "eigensolver failed");
    require(es.eigenvalues().minCoeff() >= -1e-10, "density matrix has a negative eigenvalue");
}

void Operator::check() const {
    require(entries.rows() == entries.cols(), "operator is not square");
    if (hermitian_flag)
        require((entries - entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-12,
                "operator marked Hermitian is not");
}

Mat kron(const Mat& a, const Mat& b) {
    require(a.rows() * b.rows() <= kMaxDim, "tensor product exceeds the 2^8 register cap");
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Ket kron(const Ket& a, const Ket& b) {
    require(a.amplitudes.size() * b.amplitudes.size() <= kMaxDim,
            "tensor product exceeds the 2^8 register cap");
    CVec out(a.amplitudes.size() * b.amplitudes.size());
    for (Eigen::Index i = 0; i < a.amplitudes.size(); ++i)
        out.segment(i * b.amplitudes.size(), b.amplitudes.size()) =
            a.amplitudes(i) * b.amplitudes;
    return {out};
}

Operator kron(const Operator& a, const Operator& b) {
    return {kron(a.entries, b.entries), a.hermitian_flag && b.hermitian_flag};
}

DensityMatrix pure_density(const Ket& k) {
    return {k.amplitudes * k.amplitudes.adjoint()};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.n_qubits();
    require(!keep.empty(), "partial_trace: empty keep set");
    std::vector<bool> kept(n, false);
    for (int q : keep) {
        require(q >= 0 && q < n, "partial_trace: qubit index out of range");
        require(!kept[q], "partial_trace: duplicate qubit index");
        kept[q] = true;
    }
    std::vector<int> keep_sorted, traced;
    for (int q = 0; q < n; ++q) (kept[q] ? keep_sorted : traced).push_back(q);

    const int nk = static_cast<int>(keep_sorted.size());
    const int nt = n - nk;
    const Eigen::Index dk = Eigen::Index{1} << nk;
    const Eigen::Index dt = Eigen::Index{1} << nt;

    auto full_index = [&](Eigen::Index ik, Eigen::Index it) {
        Eigen::Index idx = 0;
        for (int x = 0; x < nk; ++x)
            idx |= static_cast<Eigen::Index>(qubit_bit(ik, x, nk)) << (n - 1 - keep_sorted[x]);
        for (int x = 0; x < nt; ++x)
            idx |= static_cast<Eigen::Index>(qubit_bit(it, x, nt)) << (n - 1 - traced[x]);
        return idx;
    };

    Mat out = Mat::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i)
        for (Eigen::Index j = 0; j < dk; ++j)
            for (Eigen::Index t = 0; t < dt; ++t)
                out(i, j) += rho.entries(full_index(i, t), full_index(j, t));
    return {out};
}

EigenDecomposition eig_hermitian(const Operator& m, double tol_degen) {
    m.check();
    require(m.hermitian_flag, "eig_hermitian requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<Mat> es(m.entries);
    require(es.info() == Eigen::Success, "eigensolver failed to converge");

    EigenDecomposition eig;
    eig.eigenvalues = es.eigenvalues();
    eig.eigenvectors = es.eigenvectors();
    for (Eigen::Index c = 0; c < eig.eigenvectors.cols(); ++c) fix_phase(eig.eigenvectors, c);

    const Eigen::Index d = eig.eigenvalues.size();
    int begin = 0;
    for (Eigen::Index i = 1; i <= d; ++i) {
        if (i == d || eig.eigenvalues(i) - eig.eigenvalues(i - 1) >= tol_degen) {
            eig.degeneracy_blocks.emplace_back(begin, static_cast<int>(i));
            begin = static_cast<int>(i);
        }
    }
    return eig;
}

void canonicalize_blocks(EigenDecomposition& eig, const Mat& a) {
    for (const auto& [b, e] : eig.degeneracy_blocks) {
        const int w = e - b;
        if (w <= 1) continue;
        const Mat vb = eig.eigenvectors.middleCols(b, w);
        Mat pap = vb.adjoint() * a * vb;
        pap = (pap + pap.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<Mat> es(pap);
        if (es.info() != Eigen::Success) throw std::runtime_error("block canonicalization failed");
        eig.eigenvectors.middleCols(b, w) = vb * es.eigenvectors();
        for (int c = b; c < e; ++c) fix_phase(eig.eigenvectors, c);
    }
}

Ket make_state(const StateSpec& spec) {
    const std::string& name = spec.name;
    const double s2 = std::sqrt(2.0);

    if (name == "H") return {CVec{{1.0, 0.0}}};
    if (name == "V") return {CVec{{0.0, 1.0}}};
    if (name == "plus") return {CVec{{1.0 / s2, 1.0 / s2}}};
    if (name == "P") {
        // Bloch vector (1,1,1)/sqrt(3).
        const double r3 = std::sqrt(3.0);
        const double den = 2.0 * std::sqrt(3.0 + r3);
        CVec amp(2);
        amp(0) = Cplx(1.0, -1.0) * (1.0 + r3) / den;
        amp(1) = Cplx(1.0 / std::sqrt(3.0 + r3), 0.0);
        return {amp};
    }

    auto power_state = [&](const Ket& single, int n) {
        require(n >= 1 && n <= 8, "photon count must be in [1, 8] for " + name);
        Ket out = single;
        for (int i = 1; i < n; ++i) out = kron(out, single);
        return out;
    };
    if (name == "plusN") return power_state(make_state("plus"), spec.n);
    if (name == "PN") return power_state(make_state("P"), spec.n);
    if (name == "bell_phi_plus" || name == "ghz") {
        const int n = (name == "ghz") ? spec.n : 2;
        require(n >= 1 && n <= 8, "photon count must be in [1, 8] for " + name);
        const Eigen::Index dim = Eigen::Index{1} << n;
        CVec amp = CVec::Zero(dim);
        amp(0) = 1.0 / s2;
        amp(dim - 1) = 1.0 / s2;
        return {amp};
    }
    if (name == "custom") {
        require(!spec.amplitudes.empty(), "custom state needs amplitudes");
        CVec amp(static_cast<Eigen::Index>(spec.amplitudes.size()));
        for (Eigen::Index i = 0; i < amp.size(); ++i) amp(i) = spec.amplitudes[i];
        qubit_count(amp.size());
        const double nrm = amp.norm();
        require(nrm > 1e-12, "custom state is not normalizable");
        return {amp / nrm};
    }
    throw std::runtime_error("unknown state name '" + name + "'");
}

Ket make_state(const std::string& name, int n) {
    return make_state(StateSpec{name, n, {}});
}

Operator collective_hamiltonian(int n) {
    require(n >= 1 && n <= 8, "collective_hamiltonian: N must be in [1, 8]");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Mat h = Mat::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        h(i, i) = kPi * (n - 2 * std::popcount(static_cast<unsigned>(i)));
    return {h, true};
}

Operator pauli(char axis) {
    Mat m(2, 2);
    switch (axis) {
        case 'i': m << 1, 0, 0, 1; break;
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, Cplx(0, -1), Cplx(0, 1), 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: throw std::runtime_error("unknown Pauli axis");
    }
    return {m, true};
}

Operator identity_op(Eigen::Index dim) {
    return {Mat::Identity(dim, dim), true};
}

Operator projector(const Ket& k) {
    return {k.amplitudes * k.amplitudes.adjoint(), true};
}

double expectation(const DensityMatrix& rho, const Operator& a) {
    require(rho.entries.rows() == a.entries.rows(), "expectation: dimension mismatch");
    const Cplx v = (rho.entries * a.entries).trace();
    require(std::abs(v.imag()) <= 1e-8, "expectation has a non-negligible imaginary part");
    return v.real();
}

double purity(const DensityMatrix& rho) {
    return (rho.entries * rho.entries).trace().real();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require(rho.entries.rows() == sigma.entries.rows(), "fidelity: dimension mismatch");
    auto sqrt_psd = [](const Mat& m) {
        Eigen::SelfAdjointEigenSolver<Mat> es(m);
        require(es.info() == Eigen::Success, "eigensolver failed");
        require(es.eigenvalues().minCoeff() >= -1e-8, "fidelity input is not physical");
        Eigen::VectorXd p = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        return Mat(es.eigenvectors() * p.asDiagonal() * es.eigenvectors().adjoint());
    };
    const Mat sr = sqrt_psd(rho.entries);
    const Mat inner = sr * sigma.entries * sr;
    Eigen::SelfAdjointEigenSolver<Mat> es(inner);
    require(es.info() == Eigen::Success, "eigensolver failed");
    const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    const double f = tr * tr;
    return std::min(std::max(f, 0.0), 1.0);
}

}  // namespace qsl
