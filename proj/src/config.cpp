#include "voidsurf/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace voidsurf {

namespace {

using Json = nlohmann::ordered_json;

void check_keys(const Json& obj, const char* where,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known)
            throw std::runtime_error(std::string("config: unknown key '") +
                                     item.key() + "' in " + where);
    }
}

const Json& block(const Json& root, const char* name) {
    const Json& b = root.at(name);
    if (!b.is_object())
        throw std::runtime_error(std::string("config: '") + name +
                                 "' must be an object");
    return b;
}

double require_num(const Json& obj, const char* where, const char* key) {
    if (!obj.contains(key))
        throw std::runtime_error(std::string("config: missing '") + key +
                                 "' in " + where);
    if (!obj[key].is_number())
        throw std::runtime_error(std::string("config: '") + key + "' in " +
                                 where + " must be a number");
    return obj[key].get<double>();
}

double opt_num(const Json& obj, const char* where, const char* key,
               double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw std::runtime_error(std::string("config: '") + key + "' in " +
                                 where + " must be a number");
    return obj[key].get<double>();
}

int opt_int(const Json& obj, const char* where, const char* key,
            int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer())
        throw std::runtime_error(std::string("config: '") + key + "' in " +
                                 where + " must be an integer");
    return obj[key].get<int>();
}

bool opt_bool(const Json& obj, const char* where, const char* key,
              bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean())
        throw std::runtime_error(std::string("config: '") + key + "' in " +
                                 where + " must be a boolean");
    return obj[key].get<bool>();
}

}  // namespace

MicroVoidParams RunConfig::resolve_material() const {
    switch (kind) {
        case MaterialKind::micro_voids:
            return MicroVoidParams(micro.mu_e, micro.lambda_e, micro.alpha,
                                   micro.beta, micro.xi, micro.rho0,
                                   micro.kappa_inertia);
        case MaterialKind::relaxed:
            return from_relaxed(relaxed);
        case MaterialKind::macro:
        default:
            return from_relaxed(from_macro(macro.nu, macro.E, macro.rho0,
                                           macro.micro_scale, macro.L_c,
                                           macro.a2, macro.eta, macro.tau_c));
    }
}

RunConfig parse_config_text(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(std::string("config: invalid JSON: ") +
                                 e.what());
    }
    if (!root.is_object())
        throw std::runtime_error("config: top level must be an object");
    check_keys(root, "top level",
               {"micro_voids", "relaxed", "macro", "k", "solver", "output"});

    const int n_blocks = static_cast<int>(root.contains("micro_voids")) +
                         static_cast<int>(root.contains("relaxed")) +
                         static_cast<int>(root.contains("macro"));
    if (n_blocks != 1)
        throw std::runtime_error(
            "config: exactly one material block (micro_voids, relaxed or "
            "macro) is required");

    RunConfig c;
    if (root.contains("micro_voids")) {
        const Json& m = block(root, "micro_voids");
        check_keys(m, "micro_voids",
                   {"mu_e", "lambda_e", "alpha", "beta", "xi", "rho0",
                    "kappa_inertia"});
        c.kind = MaterialKind::micro_voids;
        c.micro.mu_e = require_num(m, "micro_voids", "mu_e");
        c.micro.lambda_e = require_num(m, "micro_voids", "lambda_e");
        c.micro.alpha = require_num(m, "micro_voids", "alpha");
        c.micro.beta = require_num(m, "micro_voids", "beta");
        c.micro.xi = require_num(m, "micro_voids", "xi");
        c.micro.rho0 = require_num(m, "micro_voids", "rho0");
        c.micro.kappa_inertia = require_num(m, "micro_voids", "kappa_inertia");
    } else if (root.contains("relaxed")) {
        const Json& m = block(root, "relaxed");
        check_keys(m, "relaxed",
                   {"mu_e", "lambda_e", "mu_micro", "lambda_micro", "rho0",
                    "L_c", "a2", "eta", "tau_c"});
        c.kind = MaterialKind::relaxed;
        c.relaxed.mu_e = require_num(m, "relaxed", "mu_e");
        c.relaxed.lambda_e = require_num(m, "relaxed", "lambda_e");
        c.relaxed.mu_micro = require_num(m, "relaxed", "mu_micro");
        c.relaxed.lambda_micro = require_num(m, "relaxed", "lambda_micro");
        c.relaxed.rho0 = require_num(m, "relaxed", "rho0");
        c.relaxed.L_c = opt_num(m, "relaxed", "L_c", 1.0);
        c.relaxed.a2 = opt_num(m, "relaxed", "a2", 1.0);
        c.relaxed.eta = opt_num(m, "relaxed", "eta", 1.0 / 3.0);
        c.relaxed.tau_c = opt_num(m, "relaxed", "tau_c", 1.0);
    } else {
        const Json& m = block(root, "macro");
        check_keys(m, "macro",
                   {"nu", "E", "rho0", "micro_scale", "L_c", "a2", "eta",
                    "tau_c"});
        c.kind = MaterialKind::macro;
        c.macro.nu = require_num(m, "macro", "nu");
        c.macro.E = require_num(m, "macro", "E");
        c.macro.rho0 = require_num(m, "macro", "rho0");
        c.macro.micro_scale = require_num(m, "macro", "micro_scale");
        c.macro.L_c = opt_num(m, "macro", "L_c", 1.0);
        c.macro.a2 = opt_num(m, "macro", "a2", 1.0);
        c.macro.eta = opt_num(m, "macro", "eta", 1.0 / 3.0);
        c.macro.tau_c = opt_num(m, "macro", "tau_c", 1.0);
    }

    if (root.contains("k")) {
        if (!root["k"].is_number())
            throw std::runtime_error("config: 'k' must be a number");
        c.k = root["k"].get<double>();
    }
    if (!(c.k > 0.0)) throw std::runtime_error("config: k must be positive");

    if (root.contains("solver")) {
        const Json& s = block(root, "solver");
        check_keys(s, "solver",
                   {"tol", "n_scan", "n_theta", "quad_tol", "max_panels"});
        c.solver.tol = opt_num(s, "solver", "tol", c.solver.tol);
        c.solver.n_scan = opt_int(s, "solver", "n_scan", c.solver.n_scan);
        c.solver.n_theta = opt_int(s, "solver", "n_theta", c.solver.n_theta);
        c.solver.quad_tol = opt_num(s, "solver", "quad_tol", c.solver.quad_tol);
        c.solver.max_panels =
            opt_int(s, "solver", "max_panels", c.solver.max_panels);
    }
    if (!(c.solver.tol > 0.0) || !(c.solver.quad_tol > 0.0))
        throw std::runtime_error("config: solver tolerances must be positive");
    if (c.solver.n_scan < 2)
        throw std::runtime_error("config: solver.n_scan must be >= 2");
    if (c.solver.n_theta < 64)
        throw std::runtime_error("config: solver.n_theta must be >= 64");
    if (c.solver.max_panels < 1)
        throw std::runtime_error("config: solver.max_panels must be >= 1");

    if (root.contains("output")) {
        const Json& o = block(root, "output");
        check_keys(o, "output",
                   {"legacy", "scan_n", "field_nx", "field_nz", "x1_max",
                    "x2_max", "t", "y1_re", "y1_im"});
        c.output.legacy = opt_bool(o, "output", "legacy", c.output.legacy);
        c.output.scan_n = opt_int(o, "output", "scan_n", c.output.scan_n);
        c.output.field_nx = opt_int(o, "output", "field_nx", c.output.field_nx);
        c.output.field_nz = opt_int(o, "output", "field_nz", c.output.field_nz);
        c.output.x1_max = opt_num(o, "output", "x1_max", c.output.x1_max);
        c.output.x2_max = opt_num(o, "output", "x2_max", c.output.x2_max);
        c.output.t = opt_num(o, "output", "t", c.output.t);
        c.output.y1_re = opt_num(o, "output", "y1_re", c.output.y1_re);
        c.output.y1_im = opt_num(o, "output", "y1_im", c.output.y1_im);
    }
    if (c.output.scan_n != 0 && c.output.scan_n < 2)
        throw std::runtime_error("config: output.scan_n must be 0 or >= 2");
    if (c.output.field_nx < 0 || c.output.field_nz < 0)
        throw std::runtime_error("config: field grid sizes must be >= 0");

    return c;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string dump_config(const RunConfig& c) {
    Json root = Json::object();
    switch (c.kind) {
        case MaterialKind::micro_voids:
            root["micro_voids"] = {{"mu_e", c.micro.mu_e},
                                   {"lambda_e", c.micro.lambda_e},
                                   {"alpha", c.micro.alpha},
                                   {"beta", c.micro.beta},
                                   {"xi", c.micro.xi},
                                   {"rho0", c.micro.rho0},
                                   {"kappa_inertia", c.micro.kappa_inertia}};
            break;
        case MaterialKind::relaxed:
            root["relaxed"] = {{"mu_e", c.relaxed.mu_e},
                               {"lambda_e", c.relaxed.lambda_e},
                               {"mu_micro", c.relaxed.mu_micro},
                               {"lambda_micro", c.relaxed.lambda_micro},
                               {"rho0", c.relaxed.rho0},
                               {"L_c", c.relaxed.L_c},
                               {"a2", c.relaxed.a2},
                               {"eta", c.relaxed.eta},
                               {"tau_c", c.relaxed.tau_c}};
            break;
        case MaterialKind::macro:
            root["macro"] = {{"nu", c.macro.nu},
                             {"E", c.macro.E},
                             {"rho0", c.macro.rho0},
                             {"micro_scale", c.macro.micro_scale},
                             {"L_c", c.macro.L_c},
                             {"a2", c.macro.a2},
                             {"eta", c.macro.eta},
                             {"tau_c", c.macro.tau_c}};
            break;
    }
    root["k"] = c.k;
    root["solver"] = {{"tol", c.solver.tol},
                      {"n_scan", c.solver.n_scan},
                      {"n_theta", c.solver.n_theta},
                      {"quad_tol", c.solver.quad_tol},
                      {"max_panels", c.solver.max_panels}};
    root["output"] = {{"legacy", c.output.legacy},
                      {"scan_n", c.output.scan_n},
                      {"field_nx", c.output.field_nx},
                      {"field_nz", c.output.field_nz},
                      {"x1_max", c.output.x1_max},
                      {"x2_max", c.output.x2_max},
                      {"t", c.output.t},
                      {"y1_re", c.output.y1_re},
                      {"y1_im", c.output.y1_im}};
    return root.dump(2) + "\n";
}

}  // namespace voidsurf
