#include "voidsurf/bulk.hpp"

#include <cmath>

namespace voidsurf {

Eigen::Matrix2d acoustic_matrix(const MicroVoidParams& p, double k) {
    double off = p.beta * k / (p.rho0 * std::sqrt(p.kappa_inertia));
    Eigen::Matrix2d Q;
    Q(0, 0) = (p.lambda_e + 2.0 * p.mu_e) * k * k / p.rho0;
    Q(0, 1) = off;
    Q(1, 0) = off;
    Q(1, 1) = (p.alpha * k * k + p.xi) / (p.rho0 * p.kappa_inertia);
    return Q;
}

BulkSpeeds bulk_speeds(const MicroVoidParams& p) {
    if (p.mu_e < 0.0)
        throw MaterialError("mu_e < 0: no real transverse speed, "
                            "material inadmissible");
    double le2 = p.lambda_e + 2.0 * p.mu_e;
    double a = p.xi + p.alpha;
    double b = p.kappa_inertia * le2;
    double disc = (a - b) * (a - b) + 4.0 * p.kappa_inertia * p.beta * p.beta;
    double root = std::sqrt(disc);
    double denom = 2.0 * p.rho0 * p.kappa_inertia;
    double v3sq = (a + b + root) / denom;
    double v4sq = (a + b - root) / denom;
    if (v4sq < 0.0)
        throw MaterialError("negative squared slow speed: "
                            "material inadmissible");
    BulkSpeeds s;
    s.v_t = std::sqrt(p.mu_e / p.rho0);
    s.v3 = std::sqrt(v3sq);
    s.v4 = std::sqrt(v4sq);
    return s;
}

BulkModes bulk_modes(const MicroVoidParams& p, const Eigen::Vector3d& m) {
    BulkSpeeds s = bulk_speeds(p);
    BulkModes modes;
    modes.u1_hat = Eigen::Vector3d(-m(2), 0.0, m(0));
    modes.u2_hat = Eigen::Vector3d(-m(1), m(0), 0.0);
    modes.frak_c = p.rho0 * p.kappa_inertia * s.v3 * s.v3 - p.xi - p.alpha;
    modes.frak_a = p.rho0 * p.kappa_inertia * s.v4 * s.v4 - p.xi - p.alpha;
    modes.u3_hat << modes.frak_c * m, p.beta;
    modes.u4_hat << modes.frak_a * m, p.beta;
    return modes;
}

}  // namespace voidsurf
