#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "voidsurf/material.hpp"

namespace voidsurf {

// Coefficient blocks of the second-order system in depth before
// density scaling.
struct RawBlocks {
    Eigen::Matrix3d T;
    Eigen::Matrix3d R;
    Eigen::Matrix3d Q;
    double k;
};

// Density-scaled triple (T_mat, R_mat, Q_mat) at wavenumber k together
// with the scaling matrix and the limiting speed of the subsonic range.
// T_mat is diagonal; T_mat and Q_mat are symmetric positive definite
// whenever the material admits real plane waves.
struct StrohSystem {
    Eigen::Matrix3d T_mat;
    Eigen::Matrix3d R_mat;
    Eigen::Matrix3d Q_mat;
    double k;
    Eigen::Matrix3d ihat_sqrt_inv;
    double v_hat;
};

// Triple rotated by an angle theta at speed v. Periodic in theta with
// period pi; a quarter turn swaps T_theta and Q_theta_tilde and sends
// R_theta to -R_theta^T.
struct RotatedTriple {
    Eigen::Matrix3d T_theta;
    Eigen::Matrix3d R_theta;
    Eigen::Matrix3d Q_theta_tilde;
    double theta;
    double v;
};

RawBlocks build_raw(const MicroVoidParams& p, double k);

StrohSystem scale(const RawBlocks& raw, const MicroVoidParams& p);

// build_raw followed by scale.
StrohSystem make_stroh(const MicroVoidParams& p, double k);

RotatedTriple rotate(const StrohSystem& s, double v, double theta);

// The six characteristic exponents at speed v, i.e. the eigenvalues of
// the quadratic pencil r^2 T + r (R + R^T) + Q - k^2 v^2 I, computed
// through the 6x6 companion linearization. Sorted by imaginary part.
std::array<std::complex<double>, 6> sextic_roots(const StrohSystem& s, double v);

// Limit speed of the coupled longitudinal/void branch alone (the
// k-dependent radicand form), called v_m in the speeds table.
double coupled_limit_speed(const MicroVoidParams& p, double k);

// Closed-form limiting speed min(v_s, v_m) at wavenumber k.
double limiting_speed_formula(const MicroVoidParams& p, double k);

// Limiting speed recovered numerically by minimizing the slowness of the
// coupled branches of the rotated acoustic tensor over theta in
// (-pi/2, pi/2), with golden-section refinement around the grid minimum.
double limiting_speed_scan(const StrohSystem& s, int n_theta);

}  // namespace voidsurf
