#include "voidsurf/impedance.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "voidsurf/errors.hpp"
#include "voidsurf/quadrature.hpp"

namespace voidsurf {

namespace {

constexpr double k_pi = 3.14159265358979323846;

using Matrix36d = Eigen::Matrix<double, 3, 6>;

}  // namespace

Impedance compute(const StrohSystem& s, double v,
                                    const ImpedanceSettings& settings) {
    if (!(v >= 0.0) || v >= s.v_hat)
        throw std::invalid_argument("impedance: speed outside [0, v_hat)");

    // T_theta has the exact eigenvalue k^2 (v_t^2 - v^2 sin^2 theta) along
    // (-sin theta, cos theta, 0). For v >= v_t it vanishes at an interior
    // angle, the integrand stops being integrable, and no amount of panel
    // refinement converges. Fail fast instead of burning the budget.
    const double vt_sq = s.T_mat(0, 0) / (s.k * s.k);
    if (v * v >= vt_sq)
        throw NumericalError(
                "impedance: transverse block of the rotated triple is singular at an "
                "interior angle (speed at or above the shear speed); angular "
                "integral does not converge");

    auto integrand = [&s, v](double theta) -> Matrix36d {
        const RotatedTriple rot = rotate(s, v, theta);
        const Eigen::Matrix3d t_inv = rot.T_theta.inverse();
        Matrix36d stacked;
        stacked.leftCols<3>() = t_inv;
        stacked.rightCols<3>() = t_inv * rot.R_theta.transpose();
        return stacked;
    };

    QuadratureResult<Matrix36d> quad;
    try {
        quad = integrate(integrand, 0.0, k_pi, settings.abs_tol, settings.rel_tol,
                                          settings.max_panels);
    } catch (const NumericalError&) {
        throw NumericalError(
                "impedance: angular quadrature failed to reach tolerance (transverse "
                "block near singular)");
    }

    Impedance result;
    result.v = v;
    result.H = quad.value.leftCols<3>() / k_pi;
    result.S = -quad.value.rightCols<3>() / k_pi;
    result.quad_error = quad.error / k_pi;

    const Eigen::Matrix3d h_inv = result.H.inverse();
    const Eigen::Matrix3cd m_raw =
            h_inv.cast<std::complex<double>>() +
            std::complex<double>(0.0, 1.0) *
                    (h_inv * result.S).cast<std::complex<double>>();
    result.hermiticity_defect = (m_raw - m_raw.adjoint()).norm();
    result.M = 0.5 * (m_raw + m_raw.adjoint());
    return result;
}

double real_determinant(const Impedance& m) {
    const std::complex<double> det = m.M.determinant();
    if (std::abs(det.imag()) > 1e-12 * (1.0 + std::abs(det.real())))
        throw NumericalError(
                "impedance: determinant of the symmetrized matrix has a nonreal "
                "residue");
    return det.real();
}

double riccati_residual(const StrohSystem& s, const Impedance& m) {
    const std::complex<double> i_unit(0.0, 1.0);
    const Eigen::Matrix3cd r = s.R_mat.cast<std::complex<double>>();
    const Eigen::Matrix3cd t_inv =
            s.T_mat.inverse().cast<std::complex<double>>();
    const Eigen::Matrix3cd q = s.Q_mat.cast<std::complex<double>>();
    const double kv_sq = s.k * s.k * m.v * m.v;
    const Eigen::Matrix3cd residual =
            (m.M - i_unit * r) * t_inv * (m.M + i_unit * r.transpose()) - q +
            kv_sq * Eigen::Matrix3cd::Identity();
    return residual.norm();
}

std::vector<PropertyRow> property_report(const StrohSystem& s,
                                                                                  const std::vector<double>& v_grid,
                                                                                  const ImpedanceSettings& settings) {
    const double h = 1e-5 * s.v_hat;
    std::vector<PropertyRow> rows;
    rows.reserve(v_grid.size());
    for (double v : v_grid) {
        const Impedance imp = compute(s, v, settings);

        PropertyRow row;
        row.v = v;
        row.hermiticity_defect = imp.hermiticity_defect;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(imp.M);
        row.min_eig = eig.eigenvalues().minCoeff();
        row.trace = imp.M.trace().real();

        // Central difference, shifted to stay inside the valid speed range.
        double lo = v - h;
        double hi = v + h;
        if (lo < 0.0) {
            lo = 0.0;
            hi = 2.0 * h;
        }
        const Eigen::Matrix3cd m_lo = compute(s, lo, settings).M;
        const Eigen::Matrix3cd m_hi = compute(s, hi, settings).M;
        const Eigen::Matrix3cd diff = (m_hi - m_lo) / (hi - lo);
        const Eigen::Matrix3cd diff_herm = 0.5 * (diff + diff.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> deig(diff_herm);
        row.derivative_max_eig = deig.eigenvalues().maxCoeff();

        rows.push_back(row);
    }
    return rows;
}

}  // namespace voidsurf
