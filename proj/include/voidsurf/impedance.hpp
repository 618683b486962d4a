#pragma once

#include <vector>

#include <Eigen/Dense>

#include "voidsurf/stroh.hpp"

namespace voidsurf {

// Surface impedance at one speed, from the angular-average representation
// M = H^{-1} + i H^{-1} S with
//   H = (1/pi) integral_0^pi T_theta^{-1} dtheta,
//   S = -(1/pi) integral_0^pi T_theta^{-1} R_theta^T dtheta.
// M is stored Hermitian-symmetrized; the pre-symmetrization defect is kept
// for diagnostics.
struct Impedance {
    Eigen::Matrix3cd M;
    Eigen::Matrix3d H;
    Eigen::Matrix3d S;
    double v = 0.0;
    double quad_error = 0.0;
    double hermiticity_defect = 0.0;
};

struct ImpedanceSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 4096;
};

// Throws std::invalid_argument if v is outside [0, v_hat), NumericalError if
// the angular quadrature cannot reach tolerance.
Impedance compute(const StrohSystem& s, double v,
                                    const ImpedanceSettings& settings = {});

// det M as a real number. The determinant of the symmetrized matrix is real
// up to rounding; the imaginary residue is checked and discarded.
double real_determinant(const Impedance& m);

// || (M - iR) T^{-1} (M + iR^T) - Q + k^2 v^2 I ||_F
double riccati_residual(const StrohSystem& s, const Impedance& m);

// Per-speed diagnostics backing the impedance guarantees: Hermiticity defect,
// extremal eigenvalues of M, definiteness of the central-difference speed
// derivative (negative definite iff derivative_max_eig < 0), and trace.
struct PropertyRow {
    double v = 0.0;
    double hermiticity_defect = 0.0;
    double min_eig = 0.0;
    double derivative_max_eig = 0.0;
    double trace = 0.0;
};

std::vector<PropertyRow> property_report(const StrohSystem& s,
                                                                                  const std::vector<double>& v_grid,
                                                                                  const ImpedanceSettings& settings = {});

}  // namespace voidsurf
