#pragma once

#include <Eigen/Dense>

#include "voidsurf/material.hpp"

namespace voidsurf {

// Speeds of the four plane waves the whole space supports: two equal
// transverse speeds v_t and two coupled longitudinal/void speeds v3 >= v4.
struct BulkSpeeds {
    double v_t;
    double v3;
    double v4;
};

// Amplitude vectors of the four characteristic modes for a propagation
// direction m. The transverse amplitudes are 3-vectors, the coupled
// amplitudes carry the void component as a fourth entry. Unnormalized.
struct BulkModes {
    Eigen::Vector3d u1_hat;
    Eigen::Vector3d u2_hat;
    Eigen::Vector4d u3_hat;
    Eigen::Vector4d u4_hat;
    double frak_c;
    double frak_a;
};

// Density-scaled 2x2 acoustic matrix of the coupled longitudinal/void
// pair at wavenumber k; exactly symmetric by construction.
Eigen::Matrix2d acoustic_matrix(const MicroVoidParams& p, double k);

// Closed-form speeds. The coupled pair follows the k-independent form in
// which xi enters without a wavenumber factor; at k = 1 the slow branch
// coincides with the limiting branch of the half-space problem.
BulkSpeeds bulk_speeds(const MicroVoidParams& p);

// Characteristic amplitudes for a unit direction m.
BulkModes bulk_modes(const MicroVoidParams& p, const Eigen::Vector3d& m);

}  // namespace voidsurf
