#include "voidsurf/stroh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "voidsurf/errors.hpp"

namespace voidsurf {

RawBlocks build_raw(const MicroVoidParams& p, double k) {
    RawBlocks b;
    b.k = k;
    b.T = Eigen::Matrix3d::Zero();
    b.T.diagonal() << k * k * p.mu_e, k * k * (2.0 * p.mu_e + p.lambda_e),
        k * k * p.alpha;
    b.R = Eigen::Matrix3d::Zero();
    b.R(0, 1) = k * k * p.lambda_e;
    b.R(1, 0) = k * k * p.mu_e;
    b.R(2, 1) = k * p.beta;
    b.Q = Eigen::Matrix3d::Zero();
    b.Q(0, 0) = k * k * (2.0 * p.mu_e + p.lambda_e);
    b.Q(1, 1) = k * k * p.mu_e;
    b.Q(2, 2) = k * k * p.alpha + p.xi;
    b.Q(0, 2) = b.Q(2, 0) = p.beta * k;
    return b;
}

StrohSystem scale(const RawBlocks& raw, const MicroVoidParams& p) {
    StrohSystem s;
    s.k = raw.k;
    double d = 1.0 / std::sqrt(p.rho0);
    double dz = 1.0 / std::sqrt(p.rho0 * p.kappa_inertia);
    s.ihat_sqrt_inv = Eigen::Vector3d(d, d, dz).asDiagonal();
    s.T_mat = s.ihat_sqrt_inv * raw.T * s.ihat_sqrt_inv;
    s.R_mat = s.ihat_sqrt_inv * raw.R * s.ihat_sqrt_inv;
    s.Q_mat = s.ihat_sqrt_inv * raw.Q * s.ihat_sqrt_inv;
    s.v_hat = limiting_speed_formula(p, raw.k);
    return s;
}

StrohSystem make_stroh(const MicroVoidParams& p, double k) {
    return scale(build_raw(p, k), p);
}

RotatedTriple rotate(const StrohSystem& s, double v, double theta) {
    double c = std::cos(theta);
    double sn = std::sin(theta);
    double kv = s.k * v;
    Eigen::Matrix3d Qt = s.Q_mat - kv * kv * Eigen::Matrix3d::Identity();
    Eigen::Matrix3d Rsym = s.R_mat + s.R_mat.transpose();

    RotatedTriple r;
    r.theta = theta;
    r.v = v;
    r.T_theta = c * c * s.T_mat - sn * c * Rsym + sn * sn * Qt;
    r.R_theta = c * c * s.R_mat + sn * c * (s.T_mat - Qt)
        - sn * sn * s.R_mat.transpose();
    r.Q_theta_tilde = c * c * Qt + sn * c * Rsym + sn * sn * s.T_mat;
    return r;
}

std::array<std::complex<double>, 6> sextic_roots(const StrohSystem& s, double v) {
    double eps_sing = 1e-12 * s.T_mat.diagonal().maxCoeff();
    if (s.T_mat.determinant() < eps_sing)
        throw NumericalError("T block is singular (alpha = 0 or mu_e = 0 "
                             "degeneracy); characteristic exponents undefined");

    double kv = s.k * v;
    Eigen::Matrix3d Qt = s.Q_mat - kv * kv * Eigen::Matrix3d::Identity();
    Eigen::Matrix3d Tinv = s.T_mat.inverse();
    Eigen::Matrix3d Rsym = s.R_mat + s.R_mat.transpose();

    Eigen::Matrix<double, 6, 6> comp = Eigen::Matrix<double, 6, 6>::Zero();
    comp.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity();
    comp.block<3, 3>(3, 0) = -Tinv * Qt;
    comp.block<3, 3>(3, 3) = -Tinv * Rsym;

    Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> es(comp, false);
    std::array<std::complex<double>, 6> roots;
    for (int i = 0; i < 6; ++i)
        roots[i] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return a.imag() != b.imag() ? a.imag() < b.imag()
                                              : a.real() < b.real();
              });
    return roots;
}

double coupled_limit_speed(const MicroVoidParams& p, double k) {
    double le2 = p.lambda_e + 2.0 * p.mu_e;
    double k2 = k * k;
    double A = p.xi + k2 * le2 * p.kappa_inertia + k2 * p.alpha;
    double rad = A * A
        - 4.0 * k2 * p.kappa_inertia
              * (p.xi * le2 - p.beta * p.beta + k2 * p.alpha * le2);
    double vm2 = rad >= 0.0
        ? (A - std::sqrt(rad)) / (2.0 * k2 * p.rho0 * p.kappa_inertia)
        : -1.0;
    if (vm2 < 0.0)
        throw MaterialError("limiting speed undefined: material does not "
                            "admit real plane waves");
    return std::sqrt(vm2);
}

double limiting_speed_formula(const MicroVoidParams& p, double k) {
    double vs2 = (2.0 * p.mu_e + p.lambda_e) / p.rho0;
    if (vs2 < 0.0)
        throw MaterialError("limiting speed undefined: material does not "
                            "admit real plane waves");
    return std::min(std::sqrt(vs2), coupled_limit_speed(p, k));
}

namespace {

// Slowness-curve objective of the coupled branches at angle theta.
//
// The rotated acoustic tensor Q_theta = sin^2 T + sin cos (R + R^T)
// + cos^2 Q always carries the exact eigenpair ((-sin, cos, 0),
// k^2 mu_e / rho0): the transverse shear branch, whose own bound is the
// bulk shear speed. The limiting speed of the surface problem is set by
// the two remaining branches, so the tensor is restricted to their
// invariant plane span{(cos, sin, 0), e3} before taking the minimum.
double coupled_branch_speed(const StrohSystem& s, double theta) {
    double c = std::cos(theta);
    double sn = std::sin(theta);
    Eigen::Matrix3d Qth = sn * sn * s.T_mat
        + sn * c * (s.R_mat + s.R_mat.transpose()) + c * c * s.Q_mat;

    Eigen::Matrix<double, 3, 2> P;
    P << c, 0.0, sn, 0.0, 0.0, 1.0;
    Eigen::Matrix2d B = P.transpose() * Qth * P;

    double tr = B(0, 0) + B(1, 1);
    double det = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
    double lam_min = 0.5 * (tr - std::sqrt(std::max(tr * tr - 4.0 * det, 0.0)));
    return std::sqrt(std::max(lam_min, 0.0)) / (s.k * std::abs(c));
}

}  // namespace

double limiting_speed_scan(const StrohSystem& s, int n_theta) {
    if (n_theta < 64)
        throw std::invalid_argument("limiting_speed_scan needs n_theta >= 64");

    // Midpoint grid on (-pi/2, pi/2); the endpoints are excluded since the
    // objective degenerates as cos(theta) -> 0.
    const double pi = 3.14159265358979323846;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < n_theta; ++i) {
        double theta = -pi / 2.0 + pi * (i + 0.5) / n_theta;
        double value = coupled_branch_speed(s, theta);
        if (value < best) {
            best = value;
            best_i = i;
        }
    }

    // Golden-section refinement over the two grid cells around the minimizer.
    double lo = -pi / 2.0 + pi * (std::max(best_i - 1, 0) + 0.5) / n_theta;
    double hi = -pi / 2.0 + pi * (std::min(best_i + 1, n_theta - 1) + 0.5) / n_theta;
    const double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = coupled_branch_speed(s, x1);
    double f2 = coupled_branch_speed(s, x2);
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = coupled_branch_speed(s, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = coupled_branch_speed(s, x2);
        }
    }
    return std::min(best, std::min(f1, f2));
}

}  // namespace voidsurf
