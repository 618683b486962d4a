#include "voidsurf/secular.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "voidsurf/errors.hpp"
#include "voidsurf/parallel.hpp"

namespace voidsurf {

namespace {

double det_at(const StrohSystem& s, double v, const ImpedanceSettings& st) {
    return real_determinant(compute(s, v, st));
}

}  // namespace

double solve(const MicroVoidParams& p, double k, double tol,
                          const ImpedanceSettings& settings) {
    const AdmissibilityReport rw = check_real_waves(p);
    if (!rw.real_waves_ok) {
        std::string msg = "secular: material does not admit real plane waves:";
        for (const auto& cond : rw.violated_conditions) msg += " " + cond + ";";
        throw MaterialError(msg);
    }
    if (!(tol >= 1e-12))
        throw std::invalid_argument("secular: tol must be >= 1e-12");

    const StrohSystem s = make_stroh(p, k);
    const double v_hat = s.v_hat;
    // The angular integral additionally needs v below the shear speed, which
    // can sit below v_hat; bracket within whichever bound is tighter.
    const double vt = std::sqrt(s.T_mat(0, 0)) / s.k;
    const double upper = std::min(v_hat, vt);
    const double b = upper * (1.0 - 1e-6);

    const double d0 = det_at(s, 0.0, settings);
    if (d0 == 0.0) return 0.0;
    if (d0 < 0.0) {
        std::ostringstream msg;
        msg << "secular: det M at v=0 is not positive (det = " << d0
                << "); the decreasing-determinant bracket does not apply";
        throw NoRootError(msg.str());
    }

    double lo = 0.0, d_lo = d0;
    double hi = 0.0, d_hi = 0.0;
    bool bracketed = false;

    const int n_coarse = 16;
    for (int i = 1; i <= n_coarse && !bracketed; ++i) {
        const double vi = b * i / n_coarse;
        const double di = det_at(s, vi, settings);
        if (di == 0.0) return vi;
        if (d_lo * di < 0.0) {
            hi = vi;
            d_hi = di;
            bracketed = true;
        } else {
            lo = vi;
            d_lo = di;
        }
    }

    // No crossing on the equidistant walk: probe geometrically closer to the
    // upper bound before giving up.
    if (!bracketed) {
        double gap = upper - b;
        for (int j = 1; j <= 10 && !bracketed; ++j) {
            gap *= 0.5;
            const double vj = upper - gap;
            double dj;
            try {
                dj = det_at(s, vj, settings);
            } catch (const NumericalError&) {
                break;  // quadrature exhausted this close to the bound
            }
            if (dj == 0.0) return vj;
            if (d_lo * dj < 0.0) {
                hi = vj;
                d_hi = dj;
                bracketed = true;
            } else {
                lo = vj;
                d_lo = dj;
            }
        }
    }

    if (!bracketed) {
        std::ostringstream msg;
        msg << "secular: no sign change of det M on [0, " << lo
                << "]: det(0) = " << d0 << ", det(" << lo << ") = " << d_lo
                << "; no subsonic crossing found";
        throw NoRootError(msg.str());
    }

    const double target = tol * v_hat;
    const double secant_width = 1e3 * tol * v_hat;
    int iter = 0;
    while (hi - lo > target) {
        if (++iter > 200)
            throw NumericalError("secular: root refinement failed to converge");
        double cand = 0.5 * (lo + hi);
        // Secant once the bracket is tight; every third step stays a bisection
        // so the width keeps shrinking geometrically.
        if (hi - lo < secant_width && d_lo != d_hi && iter % 3 != 0) {
            const double sec = (lo * d_hi - hi * d_lo) / (d_hi - d_lo);
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) cand = sec;
        }
        const double d_cand = det_at(s, cand, settings);
        if (d_cand == 0.0) return cand;
        if (d_lo * d_cand < 0.0) {
            hi = cand;
            d_hi = d_cand;
        } else {
            lo = cand;
            d_lo = d_cand;
        }
    }

    double v0 = 0.5 * (lo + hi);
    double d_v0 = det_at(s, v0, settings);

    // Drive the residual itself down; the bracket criterion alone does not
    // guarantee |det| clears its bound when tol is coarse.
    const double det_bound = 1e-8 * std::abs(d0);
    for (int j = 0; j < 40 && std::abs(d_v0) > det_bound; ++j) {
        if (d_lo * d_v0 < 0.0) {
            hi = v0;
            d_hi = d_v0;
        } else {
            lo = v0;
            d_lo = d_v0;
        }
        if (d_hi == d_lo) break;
        double sec = (lo * d_hi - hi * d_lo) / (d_hi - d_lo);
        if (!(sec >= lo && sec <= hi)) sec = 0.5 * (lo + hi);
        v0 = sec;
        d_v0 = det_at(s, v0, settings);
    }
    if (std::abs(d_v0) > det_bound)
        throw NumericalError(
                "secular: refined root leaves |det M| above 1e-8 of its value at "
                "v=0");
    return v0;
}

double legacy_R(const MicroVoidParams& p, double k, double v,
                                double* imag_residue) {
    using C = std::complex<double>;
    const double lp2m = p.lambda_e + 2.0 * p.mu_e;
    const double vt_sq = p.mu_e / p.rho0;
    const double vs_sq = lp2m / p.rho0;
    const double om_sq = k * v * k * v;
    const double k_sq = k * k;

    // Attenuation roots of the longitudinal-void subsystem. The inner
    // discriminant is a square plus a nonnegative term, hence real.
    const double xi_eff = p.xi - p.rho0 * p.kappa_inertia * om_sq;
    const double base =
            p.beta * p.beta - xi_eff * lp2m + p.alpha * om_sq * p.rho0;
    const double disc =
            4.0 * p.alpha * om_sq * p.beta * p.beta * p.rho0 +
            std::pow(-p.beta * p.beta + p.alpha * om_sq * p.rho0 + xi_eff * lp2m, 2);
    const double denom = 2.0 * p.alpha * lp2m;
    const double x1_sq = (base - std::sqrt(disc)) / denom;
    const double x2_sq = (base + std::sqrt(disc)) / denom;

    // Principal square roots throughout; the product with the transverse
    // factor stays under a single radical, which fixes the branch when both
    // factors go negative.
    const double rayleigh = std::pow(2.0 - v * v / vt_sq, 2);
    const C st1 = std::sqrt(C((1.0 - v * v / vt_sq) * (1.0 - x1_sq / k_sq), 0.0));
    const C st2 = std::sqrt(C((1.0 - v * v / vt_sq) * (1.0 - x2_sq / k_sq), 0.0));
    const C s1 = std::sqrt(C(1.0 - x1_sq / k_sq, 0.0));
    const C s2 = std::sqrt(C(1.0 - x2_sq / k_sq, 0.0));

    const C r = (rayleigh - 4.0 * st1) * s2 * (-v * v / vs_sq + x2_sq / k_sq) -
                            (rayleigh - 4.0 * st2) * s1 * (-v * v / vs_sq + x1_sq / k_sq);
    if (imag_residue) *imag_residue = std::abs(r.imag());
    return r.real();
}

SecularScan scan(const MicroVoidParams& p, double k, int n, bool with_legacy,
                                  const ImpedanceSettings& settings) {
    if (n < 2) throw std::invalid_argument("secular: scan needs n >= 2");
    const StrohSystem s = make_stroh(p, k);

    SecularScan out;
    out.v_hat = s.v_hat;
    const double b = s.v_hat * (1.0 - 1e-6);
    out.speeds.resize(static_cast<size_t>(n));
    out.det_values.assign(static_cast<size_t>(n),
                                                std::numeric_limits<double>::quiet_NaN());
    if (with_legacy) out.legacy_values.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        out.speeds[static_cast<size_t>(i)] = b * i / (n - 1);

    parallel_for(n, [&](int i) {
        const size_t idx = static_cast<size_t>(i);
        try {
            out.det_values[idx] =
                    real_determinant(compute(s, out.speeds[idx], settings));
        } catch (const NumericalError&) {
            // point not evaluable; stays NaN
        }
        if (with_legacy)
            out.legacy_values[idx] = legacy_R(p, k, out.speeds[idx], nullptr);
    });
    return out;
}

}  // namespace voidsurf
