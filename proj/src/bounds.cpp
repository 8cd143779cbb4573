#include "qsl/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

double real_trace_product(const Mat& x, const Mat& y) {
    return (x * y).trace().real();
}

}  // namespace

CoherentIncoherentSplit split_observable(const Operator& a, const EigenDecomposition& eig) {
    a.check();
    require(a.hermitian_flag, "split_observable needs a Hermitian observable");
    EigenDecomposition ce = eig;
    canonicalize_blocks(ce, a.entries);

    const Mat& v = ce.eigenvectors;
    const Mat a_tilde = v.adjoint() * a.entries * v;
    const Eigen::Index d = a_tilde.rows();

    Mat ai_tilde = Mat::Zero(d, d);
    ai_tilde.diagonal() = a_tilde.diagonal();
    const Mat ac_tilde = a_tilde - ai_tilde;

    const Eigen::VectorXd& p = ce.eigenvalues;
    double mean_i = 0.0, mean2_i = 0.0, mean2_c = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        const double ajj = a_tilde(j, j).real();
        mean_i += p(j) * ajj;
        mean2_i += p(j) * ajj * ajj;
        mean2_c += p(j) * ac_tilde.row(j).squaredNorm();
    }

    CoherentIncoherentSplit split;
    split.a_i_operator = {v * ai_tilde * v.adjoint(), true};
    split.a_c_operator = {v * ac_tilde * v.adjoint(), true};
    split.delta_a_i = std::sqrt(std::max(mean2_i - mean_i * mean_i, 0.0));
    split.delta_a_c = std::sqrt(std::max(mean2_c, 0.0));  // <A_C> = 0 in this basis
    return split;
}

QfiPair qfi_components(const EigenDecomposition& eig, const Mat& rho_dot, double eps_p) {
    const Mat r = eig.eigenvectors.adjoint() * rho_dot * eig.eigenvectors;
    const Eigen::VectorXd& p = eig.eigenvalues;
    const Eigen::Index d = r.rows();
    QfiPair out;
    for (Eigen::Index j = 0; j < d; ++j) {
        if (p(j) > eps_p) out.qfi_i += std::norm(r(j, j)) / p(j);
        for (Eigen::Index k = 0; k < d; ++k) {
            if (j == k) continue;
            const double den = p(j) + p(k);
            if (den > eps_p) out.qfi_c += 2.0 * std::norm(r(j, k)) / den;
        }
    }
    return out;
}

BoundsRecord bounds_at(const DensityMatrix& rho, const Mat& rho_dot, const Operator& a_obs,
                       const Operator* h) {
    require(rho.entries.rows() == a_obs.entries.rows(), "bounds_at: dimension mismatch");
    require(rho_dot.rows() == rho.entries.rows(), "bounds_at: rho_dot dimension mismatch");
    require(std::abs(rho_dot.trace()) <= 1e-10, "bounds_at: rho_dot is not traceless");

    EigenDecomposition eig = eig_hermitian({rho.entries, true});
    canonicalize_blocks(eig, a_obs.entries);
    const CoherentIncoherentSplit split = split_observable(a_obs, eig);
    const QfiPair qfi = qfi_components(eig, rho_dot, kEpsEigenvalue);

    BoundsRecord rec;
    rec.a = expectation(rho, a_obs);
    rec.a_dot = real_trace_product(rho_dot, a_obs.entries);
    rec.a_dot_c = real_trace_product(rho_dot, split.a_c_operator.entries);
    rec.a_dot_i = real_trace_product(rho_dot, split.a_i_operator.entries);
    rec.delta_ac = split.delta_a_c;
    rec.delta_ai = split.delta_a_i;
    rec.qfi_c = qfi.qfi_c;
    rec.qfi_i = qfi.qfi_i;

    const double ci_off = split.delta_a_i * std::sqrt(std::max(qfi.qfi_i, 0.0));
    const double ic_off = split.delta_a_c * std::sqrt(std::max(qfi.qfi_c, 0.0));
    rec.b_ci_plus = std::abs(rec.a_dot_c) + ci_off;
    rec.b_ci_minus = std::abs(rec.a_dot_c) - ci_off;
    rec.b_ic_plus = std::abs(rec.a_dot_i) + ic_off;
    rec.b_ic_minus = std::abs(rec.a_dot_i) - ic_off;
    rec.lower = std::max(rec.b_ci_minus, rec.b_ic_minus);
    rec.upper = std::min(rec.b_ci_plus, rec.b_ic_plus);

    rec.purity = purity(rho);
    if (rec.purity >= 1.0 - kPurityPureTol)
        rec.pure_upper = std::sqrt(std::max(rec.a * (1.0 - rec.a), 0.0) * std::max(qfi.qfi_c, 0.0));
    if (h) {
        const double var_a =
            real_trace_product(rho.entries, a_obs.entries * a_obs.entries) - rec.a * rec.a;
        const double mean_h = real_trace_product(rho.entries, h->entries);
        const double var_h =
            real_trace_product(rho.entries, h->entries * h->entries) - mean_h * mean_h;
        rec.mt = 2.0 * std::sqrt(std::max(var_a, 0.0)) * std::sqrt(std::max(var_h, 0.0));
    }
    return rec;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    require(hi >= lo, "golden_max: empty interval");
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    const double x = (a + b) / 2.0;
    return x;
}

std::pair<double, double> max_speed(const std::vector<BoundsRecord>& records,
                                    const std::function<double(double)>& speed_of_l,
                                    double tol) {
    require(!records.empty(), "max_speed: no records");
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i)
        if (std::abs(records[i].a_dot) > std::abs(records[best].a_dot)) best = i;

    const double grid_l = records[best].l;
    const double grid_v = std::abs(records[best].a_dot);
    if (records.size() == 1) return {grid_l, grid_v};

    const double lo = records[best > 0 ? best - 1 : 0].l;
    const double hi = records[std::min(best + 1, records.size() - 1)].l;
    const double x = golden_max(speed_of_l, lo, hi, tol);
    const double v = speed_of_l(x);
    if (v > grid_v) return {x, v};
    return {grid_l, grid_v};
}

}  // namespace qsl
