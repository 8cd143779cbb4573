#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qsl {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Register cap: dense eigensolves stay trivially fast up to 2^8.
inline constexpr Eigen::Index kMaxDim = 256;

// Number of qubits for a power-of-two dimension; throws otherwise.
int qubit_count(Eigen::Index dim);

// Qubit 0 is the leftmost tensor factor (most significant bit of the basis
// index), H -> 0, V -> 1, so indices enumerate |HH>, |HV>, |VH>, |VV>, ...
inline int qubit_bit(Eigen::Index index, int qubit, int n_qubits) {
    return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1);
}

struct Ket {
    CVec amplitudes;
    int n_qubits() const { return qubit_count(amplitudes.size()); }
    void check() const;  // unit norm within 1e-12
};

struct DensityMatrix {
    Mat entries;
    int n_qubits() const { return qubit_count(entries.rows()); }
    void check() const;  // Hermitian and unit trace within 1e-12, eigenvalues >= -1e-10
};

struct Operator {
    Mat entries;
    bool hermitian_flag = true;
    void check() const;
};

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;  // ascending
    Mat eigenvectors;             // columns, orthonormal
    std::vector<std::pair<int, int>> degeneracy_blocks;  // [begin, end) ranges
};

Mat kron(const Mat& a, const Mat& b);
Ket kron(const Ket& a, const Ket& b);
Operator kron(const Operator& a, const Operator& b);

DensityMatrix pure_density(const Ket& k);

// Reduced state on the kept qubits (indices ascending in the result).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Ascending eigensystem with deterministic eigenvector phases (largest-modulus
// component made real positive) and recorded degeneracy blocks.
EigenDecomposition eig_hermitian(const Operator& m, double tol_degen = 1e-10);

// Rotates each degeneracy block so the projected observable P.A.P becomes
// diagonal (ascending within the block). Makes the coherent/incoherent split
// of A deterministic when rho has repeated eigenvalues.
void canonicalize_blocks(EigenDecomposition& eig, const Mat& a);

struct StateSpec {
    std::string name;               // plus | plusN | bell_phi_plus | ghz | P | PN | H | V | custom
    int n = 1;                      // photon count for plusN / ghz / PN
    std::vector<Cplx> amplitudes;   // custom only
};

Ket make_state(const StateSpec& spec);
Ket make_state(const std::string& name, int n = 1);

// H = pi * sum_x sigma_z^(x): diagonal entries pi*(N - 2*popcount(index)).
Operator collective_hamiltonian(int n);

Operator pauli(char axis);  // 'i' | 'x' | 'y' | 'z'
Operator identity_op(Eigen::Index dim);
Operator projector(const Ket& k);

double expectation(const DensityMatrix& rho, const Operator& a);
double purity(const DensityMatrix& rho);

// Uhlmann fidelity; reduces to <psi|rho|psi> for pure sigma.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qsl
