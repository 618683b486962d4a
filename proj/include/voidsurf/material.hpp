#pragma once

#include <string>
#include <vector>

#include "voidsurf/errors.hpp"

namespace voidsurf {

// Constitutive coefficients of an isotropic linear elastic material with
// micro-voids. All values are taken as raw consistent numbers; no unit
// conversion happens anywhere in the library.
struct MicroVoidParams {
    double mu_e;            // shear-type modulus
    double lambda_e;        // Lame-type modulus
    double alpha;           // void-gradient modulus
    double beta;            // displacement/void coupling modulus
    double xi;              // void stiffness
    double rho0;            // mass density
    double kappa_inertia;   // micro-inertia

    MicroVoidParams(double mu_e, double lambda_e, double alpha, double beta,
                    double xi, double rho0, double kappa_inertia);
};

// Coefficients of the parent micromorphic model. The bulk moduli
// kappa_e and kappa_micro are derived on demand, never stored.
struct RelaxedParams {
    double mu_e;
    double lambda_e;
    double mu_micro;
    double lambda_micro;
    double L_c;             // characteristic length
    double a2;              // curvature weight
    double eta;             // micro-inertia density
    double tau_c;           // characteristic time
    double rho0;

    double kappa_e() const { return (2.0 * mu_e + 3.0 * lambda_e) / 3.0; }
    double kappa_micro() const { return (2.0 * mu_micro + 3.0 * lambda_micro) / 3.0; }
};

struct AdmissibilityReport {
    bool real_waves_ok = false;
    bool positive_definite_ok = false;
    std::vector<std::string> violated_conditions;
};

// Identify the micro-voids coefficients from the parent model.
MicroVoidParams from_relaxed(const RelaxedParams& p);

// Build parent-model coefficients from macroscopic Poisson ratio and
// Young modulus; micro moduli are micro_scale times the macro pair.
// The trailing arguments fix the curvature and inertia scales, which
// the macroscopic data leave undetermined.
RelaxedParams from_macro(double nu_macro, double E_macro, double rho0,
                         double micro_scale, double L_c = 1.0, double a2 = 1.0,
                         double eta = 1.0 / 3.0, double tau_c = 1.0);

// Conditions for real plane waves: mu_e>0, lambda_e+2mu_e>0, alpha>0,
// (lambda_e+2mu_e)*xi > beta^2. All inequalities strict, no slack.
AdmissibilityReport check_real_waves(const MicroVoidParams& p);

// Positivity of the stored energy: 3lambda_e+2mu_e>0, mu_e>0, xi>0,
// alpha>0, (3lambda_e+2mu_e)*xi > 3 beta^2.
AdmissibilityReport check_positive_definite(const MicroVoidParams& p);

}  // namespace voidsurf
