#pragma once

#include <string>

#include "voidsurf/material.hpp"

namespace voidsurf {

enum class MaterialKind { micro_voids, relaxed, macro };

// Raw values of the three possible material blocks. Only the block matching
// `kind` is meaningful; resolve_material() applies the conversions.
struct MicroBlock {
    double mu_e = 0.0;
    double lambda_e = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double xi = 0.0;
    double rho0 = 0.0;
    double kappa_inertia = 0.0;
};

struct MacroBlock {
    double nu = 0.0;
    double E = 0.0;
    double rho0 = 0.0;
    double micro_scale = 1.0;
    double L_c = 1.0;
    double a2 = 1.0;
    double eta = 1.0 / 3.0;
    double tau_c = 1.0;
};

struct SolverBlock {
    double tol = 1e-10;      // relative tolerance of the root search
    int n_scan = 100;        // default scan resolution
    int n_theta = 512;       // grid of the limiting-speed scan
    double quad_tol = 1e-10; // absolute and relative quadrature tolerance
    int max_panels = 4096;
};

struct OutputBlock {
    bool legacy = false;     // add the explicit secular function to scans
    int scan_n = 0;          // 0 = no scan artifact
    int field_nx = 0;        // 0 = no field artifact
    int field_nz = 0;
    double x1_max = 6.283185307179586;  // field extent along the surface
    double x2_max = 5.0;                // field extent in depth
    double t = 0.0;
    double y1_re = 1.0;      // free complex scale of the surface amplitude
    double y1_im = 0.0;
};

struct RunConfig {
    MaterialKind kind = MaterialKind::micro_voids;
    MicroBlock micro;
    RelaxedParams relaxed{};
    MacroBlock macro;
    double k = 1.0;
    SolverBlock solver;
    OutputBlock output;

    MicroVoidParams resolve_material() const;
};

// Parse a JSON config. Exactly one material block (micro_voids, relaxed or
// macro) must be present; solver tolerances must be positive; unknown keys
// are rejected. Throws std::runtime_error on any structural problem.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

// Canonical serialization with every field explicit. parse(dump(c)) restores
// the exact same run, bit for bit.
std::string dump_config(const RunConfig& c);

}  // namespace voidsurf
