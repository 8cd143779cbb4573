#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsl/core.hpp"

namespace qsl {

enum class SpectralKind { monochromatic, decorrelated, correlated };

std::string to_string(SpectralKind k);
SpectralKind spectral_kind_from_string(const std::string& s);

// Joint Gaussian model of the photons' relative frequencies omega/omega_bar,
// mean 1 per photon.
struct SpectralModel {
    int n_photons = 1;
    double center_nm = 808.0;
    SpectralKind kind = SpectralKind::monochromatic;
    Eigen::VectorXd rel_mean;   // all ones
    Eigen::MatrixXd rel_cov;
    double pump_sum_var = 0.0;  // Var(sum omega)/omega_bar^2 fixed at construction (correlated)
    void check() const;
};

// One birefringent segment. Axis z: optic axis along H/V (the variable
// wedge). Axis x: optic axis along |+->, the 45-degree noise crystal.
// Lengths are optical path differences in units of the center wavelength
// and may be negative.
struct SegmentSpec {
    char axis = 'z';
    double length_lambda = 0.0;
};

struct Trajectory {
    std::vector<double> l_grid;
    std::vector<DensityMatrix> states;
    std::string scenario_tag;
};

// FWHM widths in nm convert to relative std via sigma = (fwhm/center)/(2*sqrt(2 ln 2)).
// Correlated pairs fix Var(omega_1+omega_2)/omega_bar^2 from the pump width
// at half the center wavelength.
SpectralModel model_from_optics(SpectralKind kind, double center_nm, double filter_fwhm_nm,
                                std::optional<double> pump_fwhm_nm, int n);

// chi(t) = exp(i sum_x t_x - t^T C t / 2) for the joint Gaussian.
Cplx characteristic_function(const SpectralModel& m, const Eigen::VectorXd& t);

// Gamma_k(l) = chi(2 pi l k): decay of the coherence labeled by k, where
// k_x = +1 for an (H,V) coherence of photon x, -1 for (V,H), 0 if equal.
Cplx dephasing_factor(const SpectralModel& m, const Eigen::VectorXi& k, double l);

// Entrywise rho_ij(l) = Gamma_k(i,j)(l) * rho_ij(0); diagonal unchanged.
DensityMatrix evolve_dephasing(const DensityMatrix& rho0, const SpectralModel& m, double l);

// Gauss-Hermite rule for E[f(u)], u ~ N(0,1): evaluate at sqrt(2)*node and
// weight by the stored probability weights (they sum to 1).
struct GaussHermite {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
const GaussHermite& gauss_hermite(int n);

inline constexpr int kMinNodesPerAxis = 16;
inline constexpr int kDefaultNodesPerAxis = 64;

// Quadrature evolution through a segment chain: nodes along the principal
// covariance axes, per-photon conditional unitaries, contributions summed in
// ascending node order for bitwise reproducibility. Monochromatic models use
// the single mean-frequency node.
DensityMatrix evolve_grid(const Ket& ket0, const SpectralModel& m,
                          const std::vector<SegmentSpec>& segments,
                          int nodes_per_axis = kDefaultNodesPerAxis);
DensityMatrix evolve_grid(const DensityMatrix& rho0, const SpectralModel& m,
                          const std::vector<SegmentSpec>& segments,
                          int nodes_per_axis = kDefaultNodesPerAxis);

// Brute-force quadrature of E[exp(i 2 pi l k.u)]; test oracle for
// dephasing_factor, nodes_per_axis >= 32.
Cplx quadrature_oracle_gamma(const SpectralModel& m, const Eigen::VectorXi& k, double l,
                             int nodes_per_axis);

// Evolution family: the variable z wedge of length l followed by a fixed
// segment suffix (empty for pure dephasing, the x noise crystal otherwise).
struct Evolution {
    DensityMatrix rho0;
    SpectralModel model;
    std::vector<SegmentSpec> suffix;
    int nodes_per_axis = kDefaultNodesPerAxis;

    bool z_only() const { return suffix.empty(); }
    DensityMatrix at(double l) const;
};

enum class DerivMethod { analytic, stencil };

// d rho / dl. Analytic differentiates the dephasing factors in closed form
// (z-only scenarios); stencil is the 5-point central difference with step
// 1e-3, O(h^4). Result is Hermitian and traceless.
Mat rho_dot(const Evolution& evo, double l, DerivMethod method);

inline constexpr double kStencilStep = 1e-3;

}  // namespace qsl
