#pragma once

#include <vector>

#include "voidsurf/impedance.hpp"
#include "voidsurf/material.hpp"
#include "voidsurf/stroh.hpp"

namespace voidsurf {

// Equidistant sweep of det M_v over [0, v_hat*(1 - 1e-6)]. Points where the
// impedance cannot be evaluated (angular integral not convergent) carry NaN
// in det_values; legacy_values is filled only when requested and is always
// evaluable.
struct SecularScan {
    std::vector<double> speeds;
    std::vector<double> det_values;
    std::vector<double> legacy_values;
    double v_hat = 0.0;
};

// Unique subsonic root of det M_v = 0. Coarse bracketing from v=0 upward,
// then bisection until the bracket is small, then secant with bisection
// fallback; the returned speed satisfies |dv| <= tol * v_hat and
// |det M_{v0}| <= 1e-8 * |det M_0|.
// Throws MaterialError if the real-wave conditions fail, NoRootError if no
// sign change is found (reports the determinant at both ends).
double solve(const MicroVoidParams& p, double k, double tol,
                          const ImpedanceSettings& settings = {});

// Explicit secular function R(v) built from the two longitudinal-coupled
// attenuation roots X_1, X_2 and the classical Rayleigh combination. Complex
// intermediate values use principal square roots; the imaginary residue of
// the final combination is written to *imag_residue when given (expected
// <= 1e-9, reported rather than enforced).
double legacy_R(const MicroVoidParams& p, double k, double v,
                                double* imag_residue = nullptr);

// n >= 2 equidistant speeds; with_legacy adds R(v) per point.
SecularScan scan(const MicroVoidParams& p, double k, int n,
                                  bool with_legacy = false,
                                  const ImpedanceSettings& settings = {});

}  // namespace voidsurf
