#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "voidsurf/impedance.hpp"
#include "voidsurf/material.hpp"
#include "voidsurf/stroh.hpp"

namespace voidsurf {

struct SolutionResiduals {
    double riccati = 0.0;      // algebraic Riccati identity of M
    double pencil = 0.0;       // quadratic pencil identity of E
    double boundary = 0.0;     // traction-free surface condition, relative
    double null_vector = 0.0;  // ||M y0||
};

// The subsonic surface-wave solution: root speed, impedance at the root,
// decay matrix with its spectrum, unit surface amplitude, and the residual
// norms of the identities every accepted solution must satisfy.
struct RayleighSolution {
    double v0 = 0.0;
    Impedance M;
    Eigen::Matrix3cd E;
    Eigen::Vector3cd y0;
    Eigen::Vector3cd spectrum_E;
    SolutionResiduals residuals;
};

struct FieldSample {
    double x1 = 0.0, x2 = 0.0, t = 0.0;
    double u1 = 0.0, u2 = 0.0;
    double zeta = 0.0;
};

// Evaluation points for residual_check: interior points need x2 > 2h so the
// finite-difference stencils stay in the half-space.
struct ResidualGrid {
    std::vector<std::array<double, 2>> interior;  // (x1, x2)
    std::vector<double> surface_x1;
    double t = 0.0;
    double h = 1e-3;
};

struct ResidualReport {
    double pde_max_h = 0.0;       // max field-equation residual at step h
    double pde_max_half_h = 0.0;  // same at step h/2
    double observed_order = 0.0;  // log2 of the ratio
    double boundary_max_rel = 0.0;
};

// E = T^{-1} (M + i R^T). Throws NumericalError if any eigenvalue has
// nonpositive real part (non-decaying mode: speed at or above the limiting
// speed, or an impedance that is not a valid subsonic one).
Eigen::Matrix3cd decay_matrix(const StrohSystem& s, const Impedance& m);

// || T E^2 - i (R + R^T) E - Q + k^2 v^2 I ||_F
double pencil_residual(const StrohSystem& s, double v,
                                              const Eigen::Matrix3cd& e);

// Independent construction of E from the three decaying branches of the
// sextic: eigenvalues -i r_j, eigenvectors the null directions of
// r^2 T + r (R + R^T) + Q - k^2 v^2 I. Throws NumericalError when the
// branches are not distinct (near-defective pencil).
Eigen::Matrix3cd E_from_roots(const StrohSystem& s, double v);

// Unit-norm numerical null direction of M, phase-fixed so the first nonzero
// component is positive real. Requires |det M| <= 1e-6 (|M|/3)^3; throws
// NumericalError when the smallest singular value exceeds 1e-4 |M| (the
// impedance is not rank deficient, i.e. not at the secular root).
Eigen::Vector3cd null_vector(const Impedance& m);

// Full pipeline: secular root, impedance at the root, decay matrix, surface
// amplitude, residual norms.
RayleighSolution solve_rayleigh(const MicroVoidParams& p, double k, double tol,
                                                                const ImpedanceSettings& settings = {});

// Physical field at one spacetime point: depth propagation by exp(-k x2 E),
// descaling to displacement/void-fraction amplitudes, harmonic factor in
// (x1, t).
FieldSample field(const RayleighSolution& sol, const StrohSystem& s,
                                    const MicroVoidParams& p, double x1, double x2, double t);

// Finite-difference residuals of the three governing equations at interior
// points (two step sizes, h and h/2, for an observed convergence order) and
// algebraic residuals of the traction-free conditions at surface points.
ResidualReport residual_check(const RayleighSolution& sol,
                                                            const StrohSystem& s, const MicroVoidParams& p,
                                                            const ResidualGrid& grid);

}  // namespace voidsurf
