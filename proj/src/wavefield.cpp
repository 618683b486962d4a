#include "voidsurf/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "voidsurf/errors.hpp"
#include "voidsurf/secular.hpp"

namespace voidsurf {

namespace {

using Cd = std::complex<double>;
constexpr Cd k_i(0.0, 1.0);

// Eigendecomposition when the eigenbasis is well conditioned, otherwise the
// scaling-and-squaring path. E is generically diagonalizable; the fallback
// covers near-defective cases.
Eigen::Matrix3cd expm(const Eigen::Matrix3cd& a) {
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> eig(a);
    if (eig.info() == Eigen::Success) {
        const Eigen::Matrix3cd& vec = eig.eigenvectors();
        Eigen::JacobiSVD<Eigen::Matrix3cd> svd(vec);
        const double s_min = svd.singularValues()(2);
        if (s_min > 0.0 && svd.singularValues()(0) / s_min < 1e6) {
            const Eigen::Vector3cd exp_vals = eig.eigenvalues().array().exp();
            return vec * exp_vals.asDiagonal() * vec.inverse();
        }
    }
    return a.exp();
}

Eigen::Matrix3cd quadratic_pencil(const StrohSystem& s, double v, Cd r) {
    const double kv_sq = s.k * s.k * v * v;
    return r * r * s.T_mat.cast<Cd>() +
                  r * (s.R_mat + s.R_mat.transpose()).cast<Cd>() +
                  (s.Q_mat - kv_sq * Eigen::Matrix3d::Identity()).cast<Cd>();
}

}  // namespace

Eigen::Matrix3cd decay_matrix(const StrohSystem& s, const Impedance& m) {
    const Eigen::Matrix3cd t_inv = s.T_mat.inverse().cast<Cd>();
    const Eigen::Matrix3cd e =
            t_inv * (m.M + k_i * s.R_mat.transpose().cast<Cd>());
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> eig(e);
    for (int j = 0; j < 3; ++j) {
        if (eig.eigenvalues()(j).real() <= 0.0)
            throw NumericalError(
                    "decay matrix has a non-decaying mode (eigenvalue with nonpositive "
                    "real part)");
    }
    return e;
}

double pencil_residual(const StrohSystem& s, double v,
                                              const Eigen::Matrix3cd& e) {
    const double kv_sq = s.k * s.k * v * v;
    const Eigen::Matrix3cd residual =
            s.T_mat.cast<Cd>() * e * e -
            k_i * (s.R_mat + s.R_mat.transpose()).cast<Cd>() * e -
            s.Q_mat.cast<Cd>() + kv_sq * Eigen::Matrix3cd::Identity();
    return residual.norm();
}

Eigen::Matrix3cd E_from_roots(const StrohSystem& s, double v) {
    if (!(v >= 0.0) || v >= s.v_hat)
        throw std::invalid_argument("E_from_roots: speed outside [0, v_hat)");
    const std::array<Cd, 6> roots = sextic_roots(s, v);

    std::array<Cd, 3> up;
    int n_up = 0;
    for (const Cd& r : roots) {
        if (r.imag() > 0.0) {
            if (n_up == 3)
                throw NumericalError(
                        "E_from_roots: more than three upper-half-plane branches");
            up[static_cast<size_t>(n_up++)] = r;
        }
    }
    if (n_up != 3)
        throw NumericalError(
                "E_from_roots: expected three decaying branches (speed below the "
                "limiting speed)");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (std::abs(up[a] - up[b]) <= 1e-8 * (1.0 + std::abs(up[a])))
                throw NumericalError(
                        "E_from_roots: repeated branch root, eigenbasis ill-defined");

    Eigen::Matrix3cd basis;
    Eigen::Vector3cd lambda;
    for (int j = 0; j < 3; ++j) {
        const Eigen::Matrix3cd pencil = quadratic_pencil(s, v, up[j]);
        Eigen::JacobiSVD<Eigen::Matrix3cd> svd(pencil, Eigen::ComputeFullV);
        basis.col(j) = svd.matrixV().col(2);
        lambda(j) = -k_i * up[j];
    }
    return basis * lambda.asDiagonal() * basis.inverse();
}

Eigen::Vector3cd null_vector(const Impedance& m) {
    const double norm = m.M.norm();
    const double det_bound = 1e-6 * std::pow(norm / 3.0, 3);
    if (std::abs(m.M.determinant()) > det_bound)
        throw std::invalid_argument(
                "null_vector: |det M| too large, impedance is not at the secular "
                "root");
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(m.M, Eigen::ComputeFullV);
    if (svd.singularValues()(2) > 1e-4 * norm)
        throw NumericalError(
                "null_vector: no rank deficiency (smallest singular value above "
                "1e-4 |M|)");
    Eigen::Vector3cd y = svd.matrixV().col(2);
    for (int j = 0; j < 3; ++j) {
        const double a = std::abs(y(j));
        if (a > 1e-12) {
            y *= std::conj(y(j)) / a;
            break;
        }
    }
    return y;
}

RayleighSolution solve_rayleigh(const MicroVoidParams& p, double k, double tol,
                                                                const ImpedanceSettings& settings) {
    RayleighSolution sol;
    sol.v0 = solve(p, k, tol, settings);
    const StrohSystem s = make_stroh(p, k);
    sol.M = compute(s, sol.v0, settings);
    sol.E = decay_matrix(s, sol.M);

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> eig(sol.E);
    std::array<Cd, 3> spec{eig.eigenvalues()(0), eig.eigenvalues()(1),
                                                  eig.eigenvalues()(2)};
    std::sort(spec.begin(), spec.end(), [](const Cd& a, const Cd& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (int j = 0; j < 3; ++j) sol.spectrum_E(j) = spec[static_cast<size_t>(j)];

    sol.y0 = null_vector(sol.M);

    sol.residuals.riccati = riccati_residual(s, sol.M);
    sol.residuals.pencil = pencil_residual(s, sol.v0, sol.E);
    sol.residuals.null_vector = (sol.M * sol.y0).norm();
    const Eigen::Vector3cd y_prime = -k * sol.E * sol.y0;
    const Eigen::Vector3cd traction =
            s.T_mat.cast<Cd>() * y_prime / (k * k) +
            (k_i / k) * s.R_mat.transpose().cast<Cd>() * sol.y0;
    const double traction_scale =
            (s.T_mat.norm() * sol.E.norm() + s.R_mat.norm()) / k;
    sol.residuals.boundary = traction.norm() / traction_scale;
    return sol;
}

FieldSample field(const RayleighSolution& sol, const StrohSystem& s,
                                    const MicroVoidParams&, double x1, double x2, double t) {
    const Eigen::Matrix3cd propagator = expm(Eigen::Matrix3cd(-s.k * x2 * sol.E));
    const Eigen::Vector3cd z =
            s.ihat_sqrt_inv.cast<Cd>() * (propagator * sol.y0);
    const Cd phase = std::exp(k_i * s.k * (x1 - sol.v0 * t));
    FieldSample out;
    out.x1 = x1;
    out.x2 = x2;
    out.t = t;
    out.u1 = (z(0) * phase).real();
    out.u2 = (z(1) * phase).real();
    out.zeta = (k_i * z(2) * phase).real();
    return out;
}

namespace {

// Residuals of the three governing equations at one interior point, central
// differences with step h in x1, x2 and t.
Eigen::Vector3d pde_residual(const RayleighSolution& sol,
                                                          const StrohSystem& s, const MicroVoidParams& p,
                                                          double x1, double x2, double t, double h) {
    auto f = [&](double a, double b, double c) {
        const FieldSample smp = field(sol, s, p, a, b, c);
        return Eigen::Vector3d(smp.u1, smp.u2, smp.zeta);
    };
    const Eigen::Vector3d c0 = f(x1, x2, t);
    const Eigen::Vector3d xp = f(x1 + h, x2, t), xm = f(x1 - h, x2, t);
    const Eigen::Vector3d zp = f(x1, x2 + h, t), zm = f(x1, x2 - h, t);
    const Eigen::Vector3d tp = f(x1, x2, t + h), tm = f(x1, x2, t - h);
    const Eigen::Vector3d pp = f(x1 + h, x2 + h, t), pm = f(x1 + h, x2 - h, t);
    const Eigen::Vector3d mp = f(x1 - h, x2 + h, t), mm = f(x1 - h, x2 - h, t);

    const double h_sq = h * h;
    const Eigen::Vector3d d11 = (xp - 2.0 * c0 + xm) / h_sq;
    const Eigen::Vector3d d22 = (zp - 2.0 * c0 + zm) / h_sq;
    const Eigen::Vector3d dtt = (tp - 2.0 * c0 + tm) / h_sq;
    const Eigen::Vector3d d12 = (pp - pm - mp + mm) / (4.0 * h_sq);
    const Eigen::Vector3d d1 = (xp - xm) / (2.0 * h);
    const Eigen::Vector3d d2 = (zp - zm) / (2.0 * h);

    const double lam = p.lambda_e, mu = p.mu_e;
    Eigen::Vector3d r;
    r(0) = p.rho0 * dtt(0) -
                  ((lam + 2.0 * mu) * d11(0) + (lam + mu) * d12(1) + mu * d22(0) +
                    p.beta * d1(2));
    r(1) = p.rho0 * dtt(1) -
                  (mu * d11(1) + (lam + mu) * d12(0) + (lam + 2.0 * mu) * d22(1) +
                    p.beta * d2(2));
    r(2) = p.rho0 * p.kappa_inertia * dtt(2) -
                  (p.alpha * (d11(2) + d22(2)) - p.xi * c0(2) -
                    p.beta * (d1(0) + d2(1)));
    return r;
}

}  // namespace

ResidualReport residual_check(const RayleighSolution& sol,
                                                            const StrohSystem& s, const MicroVoidParams& p,
                                                            const ResidualGrid& grid) {
    ResidualReport report;
    for (const auto& pt : grid.interior) {
        report.pde_max_h =
                std::max(report.pde_max_h,
                                  pde_residual(sol, s, p, pt[0], pt[1], grid.t, grid.h)
                                          .cwiseAbs()
                                          .maxCoeff());
        report.pde_max_half_h =
                std::max(report.pde_max_half_h,
                                  pde_residual(sol, s, p, pt[0], pt[1], grid.t, 0.5 * grid.h)
                                          .cwiseAbs()
                                          .maxCoeff());
    }
    if (report.pde_max_h > 0.0 && report.pde_max_half_h > 0.0)
        report.observed_order =
                std::log2(report.pde_max_h / report.pde_max_half_h);
    else
        report.observed_order = std::numeric_limits<double>::infinity();

    // Traction-free conditions evaluated from the surface amplitudes, not by
    // differencing: the ansatz gives the x2-derivative exactly.
    const Eigen::Vector3cd z0 = s.ihat_sqrt_inv.cast<Cd>() * sol.y0;
    const Eigen::Vector3cd z_prime =
            -s.k * (s.ihat_sqrt_inv.cast<Cd>() * (sol.E * sol.y0));
    const double lam = p.lambda_e, mu = p.mu_e, k = s.k;
    const Cd c1 = mu * (z_prime(0) + k_i * k * z0(1));
    const Cd c2 = (lam + 2.0 * mu) * z_prime(1) + lam * k_i * k * z0(0) +
                                p.beta * k_i * z0(2);
    const Cd c3 = p.alpha * k_i * z_prime(2);
    // Scales from the term magnitudes; the single-term third condition uses
    // the field amplitude scale alpha k |z0_3| since its own term vanishes at
    // the solution.
    const double s1 = mu * (std::abs(z_prime(0)) + k * std::abs(z0(1)));
    const double s2 = (lam + 2.0 * mu) * std::abs(z_prime(1)) +
                                        std::abs(lam) * k * std::abs(z0(0)) +
                                        std::abs(p.beta) * std::abs(z0(2));
    const double s3 = p.alpha * k * std::abs(z0(2));
    for (double x1 : grid.surface_x1) {
        const Cd phase = std::exp(k_i * k * (x1 - sol.v0 * grid.t));
        const double r1 = s1 > 0.0 ? std::abs((c1 * phase).real()) / s1 : 0.0;
        const double r2 = s2 > 0.0 ? std::abs((c2 * phase).real()) / s2 : 0.0;
        const double r3 = s3 > 0.0 ? std::abs((c3 * phase).real()) / s3 : 0.0;
        report.boundary_max_rel =
                std::max({report.boundary_max_rel, r1, r2, r3});
    }
    return report;
}

}  // namespace voidsurf
