#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qsl/core.hpp"

namespace qsl {

// Observable split against the instantaneous eigenbasis of rho: A_I keeps the
// diagonal, A_C the off-diagonal part. Deltas are standard deviations against
// rho (A_C has zero mean by construction).
struct CoherentIncoherentSplit {
    Operator a_c_operator;
    Operator a_i_operator;
    double delta_a_c = 0.0;
    double delta_a_i = 0.0;
};

struct QfiPair {
    double qfi_c = 0.0;
    double qfi_i = 0.0;
};

struct BoundsRecord {
    double l = 0.0;
    double a = 0.0;
    double a_dot = 0.0;
    double a_dot_c = 0.0;
    double a_dot_i = 0.0;
    double b_ci_plus = 0.0, b_ci_minus = 0.0;
    double b_ic_plus = 0.0, b_ic_minus = 0.0;
    double lower = 0.0;  // max(b_ci_minus, b_ic_minus)
    double upper = 0.0;  // min(b_ci_plus, b_ic_plus)
    std::optional<double> mt;          // 2 dA dH, unitary families only
    std::optional<double> pure_upper;  // sqrt(a(1-a) qfi_c), pure states only
    double qfi_c = 0.0, qfi_i = 0.0;
    double delta_ac = 0.0, delta_ai = 0.0;
    double purity = 1.0;
};

// The split is taken in the block-canonicalized eigenbasis (degenerate blocks
// of rho rotated to diagonalize P.A.P); a copy of eig is canonicalized
// internally, so pre-canonicalized input is a no-op.
CoherentIncoherentSplit split_observable(const Operator& a, const EigenDecomposition& eig);

// I_C = 2 sum_{j != k} |<j|rho_dot|k>|^2 / (p_j + p_k),
// I_I =   sum_j       |<j|rho_dot|j>|^2 / p_j,
// with terms dropped when the denominator is <= eps_p.
QfiPair qfi_components(const EigenDecomposition& eig, const Mat& rho_dot, double eps_p = 1e-12);

inline constexpr double kEpsEigenvalue = 1e-12;
inline constexpr double kPurityPureTol = 1e-8;

// Full record at one point: speeds a_dot_m = Tr[rho_dot A_m], the sandwich
// b_mn(+-) = |a_dot_m| +- dA_n sqrt(I_n), and the optional Mandelstam-Tamm
// and pure-state bounds. The same canonicalized eigenbasis feeds the split
// and the QFI sums.
BoundsRecord bounds_at(const DensityMatrix& rho, const Mat& rho_dot, const Operator& a_obs,
                       const Operator* h = nullptr);

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-8);

// Grid argmax of |a_dot| refined by golden-section search on speed_of_l
// within the bracketing interval; ties break toward smaller l.
std::pair<double, double> max_speed(const std::vector<BoundsRecord>& records,
                                    const std::function<double(double)>& speed_of_l,
                                    double tol = 1e-8);

}  // namespace qsl
