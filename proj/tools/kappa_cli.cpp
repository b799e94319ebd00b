#include "kappa/calculus.hpp"
#include "kappa/deformation.hpp"
#include "kappa/errors.hpp"
#include "kappa/functions.hpp"
#include "kappa/laplace.hpp"
#include "kappa/quadrature.hpp"
#include "kappa/trig.hpp"
#include "kappa/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit-code contract: 0 success, 1 verification failure, 2 usage error,
// 3 numeric-guard error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

using nlohmann::json;

// Shortest round-trip formatting; locale-independent, so identical
// invocations produce byte-identical CSV.
std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Default quadrature budget, overridable through the environment.
kappa::QuadratureSpec cli_quadrature_spec() {
    kappa::QuadratureSpec spec;
    if (const char* env = std::getenv("KAPPA_QUAD_MAX_SUBDIV")) {
        int v = 0;
        const char* end = env + std::string(env).size();
        const auto res = std::from_chars(env, end, v);
        if (res.ec == std::errc() && res.ptr == end && v > 0)
            spec.max_subdivisions = v;
        else
            std::cerr << "kappa: ignoring invalid KAPPA_QUAD_MAX_SUBDIV value '"
                      << env << "'\n";
    }
    return spec;
}

// ------------------------------------------------------------------- eval

using EvalFn = std::function<double(double, const kappa::KappaParam&)>;

const std::map<std::string, EvalFn>& eval_registry() {
    using kappa::KappaParam;
    static const std::map<std::string, EvalFn> registry = {
        {"exp_kappa", [](double x, const KappaParam& k) { return kappa::exp_kappa(x, k); }},
        {"ln_kappa", [](double x, const KappaParam& k) { return kappa::ln_kappa(x, k); }},
        {"gamma_kappa", [](double x, const KappaParam& k) { return kappa::gamma_kappa(x, k); }},
        {"mellin_kappa", [](double x, const KappaParam& k) { return kappa::mellin_kappa(x, k); }},
        {"sinh_kappa", [](double x, const KappaParam& k) { return kappa::sinh_kappa(x, k); }},
        {"cosh_kappa", [](double x, const KappaParam& k) { return kappa::cosh_kappa(x, k); }},
        {"tanh_kappa", [](double x, const KappaParam& k) { return kappa::tanh_kappa(x, k); }},
        {"coth_kappa", [](double x, const KappaParam& k) { return kappa::coth_kappa(x, k); }},
        {"sin_kappa", [](double x, const KappaParam& k) { return kappa::sin_kappa(x, k); }},
        {"cos_kappa", [](double x, const KappaParam& k) { return kappa::cos_kappa(x, k); }},
        {"tan_kappa", [](double x, const KappaParam& k) { return kappa::tan_kappa(x, k); }},
        {"cot_kappa", [](double x, const KappaParam& k) { return kappa::cot_kappa(x, k); }},
        {"asinh_kappa", [](double x, const KappaParam& k) { return kappa::asinh_kappa(x, k); }},
        {"acosh_kappa", [](double x, const KappaParam& k) { return kappa::acosh_kappa(x, k); }},
        {"atanh_kappa", [](double x, const KappaParam& k) { return kappa::atanh_kappa(x, k); }},
        {"acoth_kappa", [](double x, const KappaParam& k) { return kappa::acoth_kappa(x, k); }},
        {"asin_kappa", [](double x, const KappaParam& k) { return kappa::asin_kappa(x, k); }},
        {"acos_kappa", [](double x, const KappaParam& k) { return kappa::acos_kappa(x, k); }},
        {"atan_kappa", [](double x, const KappaParam& k) { return kappa::atan_kappa(x, k); }},
        {"acot_kappa", [](double x, const KappaParam& k) { return kappa::acot_kappa(x, k); }},
        {"kinetic_energy", [](double x, const KappaParam& k) { return kappa::kinetic_energy(x, k); }},
        {"lorentz_factor", [](double x, const KappaParam& k) { return kappa::lorentz_factor(x, k); }},
        {"deform_map", [](double x, const KappaParam& k) { return kappa::deform_map(x, k); }},
        {"deform_inv", [](double x, const KappaParam& k) { return kappa::deform_inv(x, k); }},
    };
    return registry;
}

struct EvalOptions {
    std::string function;
    double x_min = 0.0;
    double x_max = 1.0;
    int points = 2;
    std::string kappa_list = "0";
    std::string scale = "linear";
    std::string output = "-";
};

int run_eval(const EvalOptions& opt) {
    const auto& registry = eval_registry();
    const auto it = registry.find(opt.function);
    if (it == registry.end()) {
        std::cerr << "kappa: unknown function '" << opt.function
                  << "'; known functions:";
        for (const auto& [name, fn] : registry)
            std::cerr << " " << name;
        std::cerr << "\n";
        return kExitUsage;
    }
    if (opt.points < 2) {
        std::cerr << "kappa: --points must be at least 2\n";
        return kExitUsage;
    }
    if (!(opt.x_min < opt.x_max)) {
        std::cerr << "kappa: --xmin must be strictly below --xmax\n";
        return kExitUsage;
    }
    const bool log_scale = opt.scale == "log";
    if (log_scale && !(opt.x_min > 0.0)) {
        std::cerr << "kappa: log scale requires --xmin > 0\n";
        return kExitUsage;
    }

    // The kappa column echoes the tokens exactly as given.
    std::vector<std::pair<std::string, kappa::KappaParam>> kappas;
    std::stringstream tokens(opt.kappa_list);
    std::string token;
    while (std::getline(tokens, token, ',')) {
        if (token.empty())
            continue;
        try {
            const double value = std::stod(token);
            kappas.emplace_back(token, kappa::KappaParam(value));
        } catch (const kappa::Error&) {
            std::cerr << "kappa: --kappa token '" << token
                      << "' is outside the physical range (-1, 1)\n";
            return kExitUsage;
        } catch (const std::exception&) {
            std::cerr << "kappa: bad --kappa token '" << token << "'\n";
            return kExitUsage;
        }
    }
    if (kappas.empty()) {
        std::cerr << "kappa: --kappa list is empty\n";
        return kExitUsage;
    }

    std::ofstream file;
    if (opt.output != "-") {
        file.open(opt.output);
        if (!file) {
            std::cerr << "kappa: cannot open '" << opt.output
                      << "' for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& out = opt.output == "-" ? std::cout : file;

    out << "x,kappa,value\n";
    for (int i = 0; i < opt.points; ++i) {
        const double frac = static_cast<double>(i) / (opt.points - 1);
        const double x =
            log_scale ? opt.x_min * std::pow(opt.x_max / opt.x_min, frac)
                      : opt.x_min + frac * (opt.x_max - opt.x_min);
        for (const auto& [label, k] : kappas) {
            double value;
            try {
                value = it->second(x, k);
            } catch (const kappa::Error& e) {
                std::cerr << "kappa: " << opt.function << "(x=" << x
                          << ", kappa=" << label << "): " << e.what() << "\n";
                value = std::numeric_limits<double>::quiet_NaN();
            }
            out << format_double(x) << "," << label << ","
                << format_double(value) << "\n";
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::string profile = "default";
};

int run_verify(const VerifyOptions& opt) {
    kappa::Suite suite;
    if (!kappa::parse_suite(opt.suite, suite)) {
        std::cerr << "kappa: unknown suite '" << opt.suite
                  << "'; expected algebra, functions, calculus, trig, "
                     "laplace, stat or all\n";
        return kExitUsage;
    }
    const kappa::Profile profile = opt.profile == "strict"
                                       ? kappa::Profile::strict
                                       : kappa::Profile::defaults;
    const auto results = kappa::run_suite(suite, opt.seed, profile);

    json header;
    header["suite"] = kappa::suite_name(suite);
    header["seed"] = opt.seed;
    header["profile"] = opt.profile;
    header["checks"] = results.size();
    std::cout << header.dump() << "\n";

    bool all_pass = true;
    for (const auto& r : results) {
        json line;
        line["anchor"] = r.anchor;
        if (std::isfinite(r.residual))
            line["residual"] = r.residual;
        else
            line["residual"] = nullptr;
        line["tolerance"] = r.tolerance;
        line["pass"] = r.pass;
        std::cout << line.dump() << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

// -------------------------------------------------------------- transform

struct TransformOptions {
    std::string kind;
    std::string descriptor;
    double s = 0.0;
    bool has_s = false;
    double r = 0.0;
    bool has_r = false;
    double t = 0.0;
    bool has_t = false;
    double tau = 0.0;
    double nu = 0.0;
    bool has_nu = false;
    int p = 0;
    bool has_p = false;
    double kappa_value = 0.0;
    double abscissa = 0.0;
    bool has_abscissa = false;
};

int emit_guard(json guard) {
    std::cout << guard.dump() << "\n";
    return kExitGuard;
}

bool parse_table_descriptor(const TransformOptions& opt, kappa::TableKind& kind,
                            double& param, std::string& problem) {
    if (opt.descriptor == "const1") {
        kind = kappa::TableKind::heaviside;
        param = 0.0;
    } else if (opt.descriptor == "step") {
        kind = kappa::TableKind::heaviside;
        param = opt.tau;
    } else if (opt.descriptor == "dirac") {
        kind = kappa::TableKind::dirac;
        param = opt.tau;
    } else if (opt.descriptor == "power") {
        if (!opt.has_nu) {
            problem = "descriptor 'power' requires --nu";
            return false;
        }
        kind = kappa::TableKind::power;
        param = opt.nu;
    } else if (opt.descriptor == "monomial") {
        if (!opt.has_p) {
            problem = "descriptor 'monomial' requires --p";
            return false;
        }
        kind = kappa::TableKind::monomial;
        param = opt.p;
    } else {
        problem = "unknown descriptor '" + opt.descriptor +
                  "'; expected const1, step, dirac, power or monomial";
        return false;
    }
    return true;
}

int run_transform_laplace(const TransformOptions& opt,
                          const kappa::KappaParam& k) {
    if (!opt.has_s) {
        std::cerr << "kappa: transform laplace requires --s\n";
        return kExitUsage;
    }
    kappa::TableKind kind;
    double param = 0.0;
    std::string problem;
    if (!parse_table_descriptor(opt, kind, param, problem)) {
        std::cerr << "kappa: " << problem << "\n";
        return kExitUsage;
    }
    const kappa::TableEntry entry = kappa::laplace_table(kind, param, k);
    if (opt.s <= entry.growth_bound)
        return emit_guard({{"error", "convergence guard violated"},
                           {"guard", "s > growth_bound"},
                           {"s", opt.s},
                           {"growth_bound", entry.growth_bound}});

    json out;
    out["kind"] = "laplace";
    out["descriptor"] = opt.descriptor;
    out["s"] = opt.s;
    out["kappa"] = k.value();
    if (kind == kappa::TableKind::dirac) {
        // Point mass: the defining integral collapses in closed form.
        out["value"] = entry.F(opt.s);
        out["error"] = 0.0;
        out["converged"] = true;
    } else {
        const double s = opt.s;
        const auto integrand = [&entry, s, &k](double t) {
            return entry.f(t) * std::exp(-s * kappa::deform_map(t, k));
        };
        kappa::QuadratureSpec spec = cli_quadrature_spec();
        if (kind == kappa::TableKind::heaviside && param > 0.0)
            spec.breakpoints = {param};   // keep the step on a panel edge
        const kappa::QuadratureResult q =
            kappa::integrate_tail(integrand, 0.0, k, spec);
        out["value"] = q.value;
        out["error"] = q.error;
        out["converged"] = q.converged;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_transform_mellin(const TransformOptions& opt,
                         const kappa::KappaParam& k) {
    if (!opt.has_r) {
        std::cerr << "kappa: transform mellin requires --r\n";
        return kExitUsage;
    }
    const double limit = k.is_zero()
                             ? std::numeric_limits<double>::infinity()
                             : 1.0 / std::fabs(k.value());
    if (!(opt.r > 0.0) || !(opt.r < limit))
        return emit_guard({{"error", "convergence guard violated"},
                           {"guard", "0 < r < 1/|kappa|"},
                           {"r", opt.r},
                           {"upper_limit", limit}});

    const double r = opt.r;
    kappa::Integrand integrand;
    if (r < 1.0) {
        // t = z^(1/r) absorbs the singular t^(r-1) weight at the origin,
        // the same substitution the truncated-family quadrature uses.
        integrand = [r, &k](double z) {
            return kappa::exp_kappa(-std::pow(z, 1.0 / r), k) / r;
        };
    } else {
        integrand = [r, &k](double t) {
            return std::pow(t, r - 1.0) * kappa::exp_kappa(-t, k);
        };
    }
    const kappa::QuadratureResult q =
        kappa::integrate_tail(integrand, 0.0, k, cli_quadrature_spec());
    json out;
    out["kind"] = "mellin";
    out["r"] = opt.r;
    out["kappa"] = k.value();
    out["value"] = q.value;
    out["error"] = q.error;
    out["converged"] = q.converged;
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_transform_inverse(const TransformOptions& opt,
                          const kappa::KappaParam& k) {
    if (!opt.has_t) {
        std::cerr << "kappa: transform inverse requires --t\n";
        return kExitUsage;
    }
    if (!(opt.t > 0.0)) {
        std::cerr << "kappa: transform inverse requires --t > 0\n";
        return kExitUsage;
    }
    kappa::TableKind kind;
    double param = 0.0;
    std::string problem;
    if (!parse_table_descriptor(opt, kind, param, problem)) {
        std::cerr << "kappa: " << problem << "\n";
        return kExitUsage;
    }
    if (kind == kappa::TableKind::power) {
        std::cerr << "kappa: the power row has no complex closed form; "
                     "use const1, step, dirac or monomial\n";
        return kExitUsage;
    }
    const double bound = kappa::laplace_table(kind, param, k).growth_bound;
    const double c = opt.has_abscissa ? opt.abscissa : bound + 0.5;
    if (!(c > bound))
        return emit_guard({{"error", "convergence guard violated"},
                           {"guard", "contour abscissa > growth_bound"},
                           {"abscissa", c},
                           {"growth_bound", bound}});

    const auto F = kappa::laplace_table_complex(kind, param, k);
    const kappa::QuadratureSpec spec = cli_quadrature_spec();
    const double v1 = kappa::inverse_laplace_kappa(F, opt.t, k, c, spec);
    // Contour independence is the practical error estimate here.
    const double v2 = kappa::inverse_laplace_kappa(F, opt.t, k, c + 0.25, spec);
    const double error = std::fabs(v1 - v2);
    json out;
    out["kind"] = "inverse";
    out["descriptor"] = opt.descriptor;
    out["t"] = opt.t;
    out["kappa"] = k.value();
    out["abscissa"] = c;
    out["value"] = v1;
    out["error"] = error;
    out["converged"] = error <= 1e-6 * std::max(1.0, std::fabs(v1));
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_transform(const TransformOptions& opt) {
    try {
        const kappa::KappaParam k(opt.kappa_value);
        if (opt.kind == "laplace")
            return run_transform_laplace(opt, k);
        if (opt.kind == "mellin")
            return run_transform_mellin(opt, k);
        if (opt.kind == "inverse")
            return run_transform_inverse(opt, k);
        std::cerr << "kappa: unknown transform kind '" << opt.kind
                  << "'; expected laplace, mellin or inverse\n";
        return kExitUsage;
    } catch (const kappa::InputError& e) {
        std::cerr << "kappa: " << e.what() << "\n";
        return kExitUsage;
    } catch (const kappa::Error& e) {
        return emit_guard({{"error", e.what()}});
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa-deformed mathematics toolkit"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate a library function on a grid, CSV to stdout");
    eval_cmd->add_option("function", eval_opt.function, "Function name")
        ->required();
    eval_cmd->add_option("--xmin", eval_opt.x_min, "Grid start")->required();
    eval_cmd->add_option("--xmax", eval_opt.x_max, "Grid end")->required();
    eval_cmd->add_option("--points", eval_opt.points, "Grid size (>= 2)")
        ->required();
    eval_cmd->add_option("--kappa", eval_opt.kappa_list,
                         "Comma-separated deformation parameters");
    eval_cmd->add_option("--scale", eval_opt.scale, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
    eval_cmd->add_option("--output", eval_opt.output,
                         "Output path, '-' for stdout");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the identity verification suite, NDJSON to stdout");
    verify_cmd->add_option("suite", verify_opt.suite,
                           "algebra, functions, calculus, trig, laplace, "
                           "stat or all");
    verify_cmd->add_option("--seed", verify_opt.seed, "Deterministic seed");
    verify_cmd->add_option("--tolerance", verify_opt.profile,
                           "default or strict")
        ->check(CLI::IsMember({"default", "strict"}));

    TransformOptions tr_opt;
    CLI::App* tr_cmd = app.add_subcommand(
        "transform", "Drive the deformed transforms, JSON to stdout");
    tr_cmd->add_option("kind", tr_opt.kind, "laplace, mellin or inverse")
        ->required();
    tr_cmd->add_option("descriptor", tr_opt.descriptor,
                       "const1, step, dirac, power or monomial");
    tr_cmd->add_option("--s", tr_opt.s, "Transform variable (laplace)")
        ->each([&](const std::string&) { tr_opt.has_s = true; });
    tr_cmd->add_option("--r", tr_opt.r, "Mellin order")
        ->each([&](const std::string&) { tr_opt.has_r = true; });
    tr_cmd->add_option("--t", tr_opt.t, "Evaluation time (inverse)")
        ->each([&](const std::string&) { tr_opt.has_t = true; });
    tr_cmd->add_option("--tau", tr_opt.tau, "Shift for step/dirac rows");
    tr_cmd->add_option("--nu", tr_opt.nu, "Exponent for the power row")
        ->each([&](const std::string&) { tr_opt.has_nu = true; });
    tr_cmd->add_option("--p", tr_opt.p, "Degree for the monomial row")
        ->each([&](const std::string&) { tr_opt.has_p = true; });
    tr_cmd->add_option("--kappa", tr_opt.kappa_value,
                       "Deformation parameter");
    tr_cmd->add_option("--abscissa", tr_opt.abscissa,
                       "Contour abscissa (inverse)")
        ->each([&](const std::string&) { tr_opt.has_abscissa = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (eval_cmd->parsed())
        return run_eval(eval_opt);
    if (verify_cmd->parsed())
        return run_verify(verify_opt);
    if (tr_cmd->parsed())
        return run_transform(tr_opt);
    return kExitUsage;
}
