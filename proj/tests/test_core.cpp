#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsl/core.hpp"

using namespace qsl;
using std::numbers::pi;

namespace {
constexpr double kTol = 1e-12;

double mat_dist(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("qubit indexing puts qubit 0 on the most significant bit") {
    CHECK(qubit_count(2) == 1);
    CHECK(qubit_count(16) == 4);
    CHECK_THROWS(qubit_count(3));
    CHECK_THROWS(qubit_count(1));

    // index 1 of a 2-qubit register is |HV>: qubit 0 = H, qubit 1 = V.
    CHECK(qubit_bit(1, 0, 2) == 0);
    CHECK(qubit_bit(1, 1, 2) == 1);
    CHECK(qubit_bit(2, 0, 2) == 1);
    CHECK(qubit_bit(2, 1, 2) == 0);
}

TEST_CASE("kron layout matches the index convention") {
    const Ket h = make_state("H");
    const Ket v = make_state("V");
    const Ket hv = kron(h, v);
    REQUIRE(hv.amplitudes.size() == 4);
    CHECK(std::abs(hv.amplitudes(1) - 1.0) < kTol);

    Mat a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 5, 6, 7;
    const Mat k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(std::abs(k(0, 1) - Cplx(5)) < kTol);
    CHECK(std::abs(k(2, 1) - Cplx(15)) < kTol);
    CHECK(std::abs(k(3, 3) - Cplx(28)) < kTol);

    // caps the register size
    Mat big = Mat::Identity(256, 256);
    CHECK_THROWS(kron(big, b));
}

TEST_CASE("pauli algebra") {
    const Mat x = pauli('x').entries;
    const Mat y = pauli('y').entries;
    const Mat z = pauli('z').entries;
    CHECK(mat_dist(x * y, Cplx(0, 1) * z) < kTol);
    CHECK(mat_dist(x * x, Mat::Identity(2, 2)) < kTol);
    CHECK(mat_dist(y * y, Mat::Identity(2, 2)) < kTol);
    CHECK_THROWS(pauli('q'));
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
    const DensityMatrix rho = pure_density(make_state("bell_phi_plus"));
    const DensityMatrix left = partial_trace(rho, {0});
    const DensityMatrix right = partial_trace(rho, {1});
    CHECK(mat_dist(left.entries, Mat::Identity(2, 2) / 2.0) < kTol);
    CHECK(mat_dist(right.entries, Mat::Identity(2, 2) / 2.0) < kTol);
}

TEST_CASE("partial trace of a product state returns its factors") {
    const Ket p = make_state("P");
    const Ket plus = make_state("plus");
    const DensityMatrix rho = pure_density(kron(p, plus));
    CHECK(mat_dist(partial_trace(rho, {0}).entries, pure_density(p).entries) < kTol);
    CHECK(mat_dist(partial_trace(rho, {1}).entries, pure_density(plus).entries) < kTol);
    CHECK(mat_dist(partial_trace(rho, {0, 1}).entries, rho.entries) < kTol);
    CHECK_THROWS(partial_trace(rho, {}));
    CHECK_THROWS(partial_trace(rho, {2}));
}

TEST_CASE("eig_hermitian is ascending, orthonormal, phase fixed") {
    Mat m(2, 2);
    m << 1.0, Cplx(0.0, -0.5), Cplx(0.0, 0.5), 2.0;
    const auto eig = eig_hermitian({m, true});
    CHECK(eig.eigenvalues(0) <= eig.eigenvalues(1));
    CHECK(mat_dist(eig.eigenvectors.adjoint() * eig.eigenvectors, Mat::Identity(2, 2)) < 1e-12);
    const Mat rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
    CHECK(mat_dist(rebuilt, m) < 1e-12);
    for (int c = 0; c < 2; ++c) {
        Eigen::Index imax = 0;
        eig.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
        const Cplx lead = eig.eigenvectors(imax, c);
        CHECK(lead.real() > 0.0);
        CHECK(std::abs(lead.imag()) < 1e-12);
    }
    REQUIRE(eig.degeneracy_blocks.size() == 2);
}

TEST_CASE("degeneracy blocks group equal eigenvalues") {
    const auto eig = eig_hermitian(identity_op(4));
    REQUIRE(eig.degeneracy_blocks.size() == 1);
    CHECK(eig.degeneracy_blocks[0].first == 0);
    CHECK(eig.degeneracy_blocks[0].second == 4);
}

TEST_CASE("canonicalize_blocks diagonalizes the projected observable") {
    auto eig = eig_hermitian(identity_op(2));
    canonicalize_blocks(eig, pauli('x').entries);
    const Mat a_tilde =
        eig.eigenvectors.adjoint() * pauli('x').entries * eig.eigenvectors;
    CHECK(std::abs(a_tilde(0, 1)) < 1e-12);
    CHECK(std::abs(a_tilde(1, 0)) < 1e-12);
    // ascending within the block
    CHECK(a_tilde(0, 0).real() < a_tilde(1, 1).real());
    // still an eigenbasis of the identity
    CHECK(mat_dist(eig.eigenvectors.adjoint() * eig.eigenvectors, Mat::Identity(2, 2)) < 1e-12);
}

TEST_CASE("make_state catalog") {
    SUBCASE("plus and plusN") {
        const Ket plus = make_state("plus");
        CHECK(std::abs(plus.amplitudes(0) - 1.0 / std::sqrt(2.0)) < kTol);
        CHECK(std::abs(plus.amplitudes(1) - 1.0 / std::sqrt(2.0)) < kTol);
        const Ket pp = make_state("plusN", 2);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(pp.amplitudes(i) - 0.5) < kTol);
    }
    SUBCASE("bell and ghz") {
        const Ket bell = make_state("bell_phi_plus");
        CHECK(std::abs(bell.amplitudes(0) - 1.0 / std::sqrt(2.0)) < kTol);
        CHECK(std::abs(bell.amplitudes(3) - 1.0 / std::sqrt(2.0)) < kTol);
        CHECK(std::abs(bell.amplitudes(1)) < kTol);
        const Ket ghz3 = make_state("ghz", 3);
        CHECK(std::abs(ghz3.amplitudes(0) - 1.0 / std::sqrt(2.0)) < kTol);
        CHECK(std::abs(ghz3.amplitudes(7) - 1.0 / std::sqrt(2.0)) < kTol);
        CHECK(mat_dist(pure_density(make_state("ghz", 2)).entries,
                       pure_density(bell).entries) < kTol);
    }
    SUBCASE("P has Bloch vector (1,1,1)/sqrt(3)") {
        const DensityMatrix rho = pure_density(make_state("P"));
        const double s = 1.0 / std::sqrt(3.0);
        CHECK(std::abs(expectation(rho, pauli('x')) - s) < kTol);
        CHECK(std::abs(expectation(rho, pauli('y')) - s) < kTol);
        CHECK(std::abs(expectation(rho, pauli('z')) - s) < kTol);
        const Ket pn = make_state("PN", 2);
        CHECK(mat_dist(pure_density(pn).entries,
                       kron(pure_density(make_state("P")).entries,
                            pure_density(make_state("P")).entries)) < kTol);
    }
    SUBCASE("custom is normalized") {
        StateSpec spec;
        spec.name = "custom";
        spec.amplitudes = {Cplx(3, 0), Cplx(0, 4)};
        const Ket k = make_state(spec);
        CHECK(std::abs(k.amplitudes(0) - 0.6) < kTol);
        CHECK(std::abs(k.amplitudes(1) - Cplx(0, 0.8)) < kTol);
        spec.amplitudes = {Cplx(0, 0), Cplx(0, 0)};
        CHECK_THROWS(make_state(spec));
        spec.amplitudes = {1, 0, 0};
        CHECK_THROWS(make_state(spec));
    }
    SUBCASE("unknown name throws") { CHECK_THROWS(make_state("qutrit")); }
    SUBCASE("photon count range") {
        CHECK_THROWS(make_state("plusN", 0));
        CHECK_THROWS(make_state("ghz", 9));
        CHECK(make_state("ghz", 8).amplitudes.size() == 256);
    }
}

TEST_CASE("collective hamiltonian diagonal") {
    const Operator h1 = collective_hamiltonian(1);
    CHECK(std::abs(h1.entries(0, 0) - pi) < kTol);
    CHECK(std::abs(h1.entries(1, 1) + pi) < kTol);
    const Operator h3 = collective_hamiltonian(3);
    CHECK(std::abs(h3.entries(0, 0) - 3 * pi) < kTol);          // HHH
    CHECK(std::abs(h3.entries(5, 5) + pi) < kTol);              // VHV
    CHECK(std::abs(h3.entries(7, 7) + 3 * pi) < kTol);          // VVV
    CHECK(h3.entries.cwiseAbs().sum() ==
          doctest::Approx(h3.entries.diagonal().cwiseAbs().sum()));
    CHECK_THROWS(collective_hamiltonian(0));
    CHECK_THROWS(collective_hamiltonian(9));
}

TEST_CASE("expectation demands near-real values") {
    const DensityMatrix rho = pure_density(make_state("plus"));
    CHECK(std::abs(expectation(rho, pauli('x')) - 1.0) < kTol);
    StateSpec yplus;
    yplus.name = "custom";
    yplus.amplitudes = {Cplx(1, 0), Cplx(0, 1)};
    const DensityMatrix rho_y = pure_density(make_state(yplus));
    Mat skew(2, 2);
    skew << 0, 1, 0, 0;  // not Hermitian: trace with rho_y has an imaginary part
    CHECK_THROWS(expectation(rho_y, Operator{skew, false}));
}

TEST_CASE("purity and fidelity") {
    const DensityMatrix pure = pure_density(make_state("P"));
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
    DensityMatrix mixed{Mat::Identity(2, 2) / 2.0};
    CHECK(purity(mixed) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(fidelity(pure, pure) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fidelity(mixed, pure) == doctest::Approx(0.5).epsilon(1e-8));
    const DensityMatrix h = pure_density(make_state("H"));
    const DensityMatrix v = pure_density(make_state("V"));
    CHECK(fidelity(h, v) < 1e-10);
    // fidelity between two mixed states: classical case reduces to
    // (sum_i sqrt(p_i q_i))^2 on the diagonal
    DensityMatrix p{Mat::Zero(2, 2)}, q{Mat::Zero(2, 2)};
    p.entries(0, 0) = 0.7;
    p.entries(1, 1) = 0.3;
    q.entries(0, 0) = 0.2;
    q.entries(1, 1) = 0.8;
    const double want = std::pow(std::sqrt(0.7 * 0.2) + std::sqrt(0.3 * 0.8), 2);
    CHECK(fidelity(p, q) == doctest::Approx(want).epsilon(1e-10));
}
