#include "kappa/laplace.hpp"

#include "kappa/bessel.hpp"
#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"
#include "kappa/functions.hpp"
#include "kappa/gamma_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace kappa {

namespace {

constexpr double kPi = std::numbers::pi;

void require_not_nan(double x, const char* who) {
    if (std::isnan(x))
        throw InputError(std::string(who) + ": NaN input");
}

void require_above_bound(double s, double bound, const char* who) {
    if (!(s > bound))
        throw DomainError(std::string(who) + ": transform needs s > " +
                          std::to_string(bound) + ", got s = " + std::to_string(s));
}

double scaled_residual(double lhs, double rhs) {
    return std::fabs(lhs - rhs) /
           std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

} // namespace

double laplace_kappa(const Integrand& f, double s, const KappaParam& k,
                     double growth_bound, const QuadratureSpec& spec) {
    require_not_nan(s, "laplace_kappa");
    if (!f)
        throw InputError("laplace_kappa: needs a signal");
    require_above_bound(s, growth_bound, "laplace_kappa");
    const auto g = [&, s](double t) {
        const double log_kernel = -s * deform_map(t, k);
        const double ft = f(t);
        // At extreme t the signal may overflow while the kernel underflows
        // harder; the product is then an exact zero, not inf * 0.
        if (!std::isfinite(ft) && log_kernel < -600.0)
            return 0.0;
        return ft * std::exp(log_kernel);
    };
    return integrate_tail(g, 0.0, k, spec).value;
}

TableEntry laplace_table(TableKind kind, double param, const KappaParam& k) {
    require_not_nan(param, "laplace_table");
    const double kp = k.value();
    TableEntry e;
    switch (kind) {
    case TableKind::dirac: {
        if (param < 0.0)
            throw DomainError("laplace_table: dirac location must be >= 0");
        const double theta = deform_map(param, k);
        e.f = {};
        e.F = [theta](double s) { return std::exp(-s * theta); };
        e.growth_bound = 0.0;
        e.label = "dirac(tau=" + std::to_string(param) + ")";
        break;
    }
    case TableKind::heaviside: {
        if (param < 0.0)
            throw DomainError("laplace_table: step location must be >= 0");
        const double tau = param;
        const double theta = deform_map(tau, k);
        const double root = std::sqrt(1.0 + kp * kp * tau * tau);
        e.f = [tau](double t) { return t >= tau ? 1.0 : 0.0; };
        e.F = [theta, root, tau, kp](double s) {
            require_above_bound(s, kp, "laplace_table(heaviside)");
            return (s * root + kp * kp * tau) / ((s - kp) * (s + kp)) *
                   std::exp(-s * theta);
        };
        e.growth_bound = kp;
        e.label = "heaviside(tau=" + std::to_string(param) + ")";
        break;
    }
    case TableKind::power: {
        const double nu = param;
        if (!(nu > 0.0))
            throw DomainError("laplace_table: power row requires nu > 0");
        e.f = [nu](double t) { return std::pow(t, nu - 1.0); };
        e.F = [nu, kp](double s) {
            require_above_bound(s, kp * nu, "laplace_table(power)");
            double primary;
            if (kp == 0.0) {
                primary = std::exp(std::lgamma(nu) - nu * std::log(s));
            } else {
                const detail::SignedLog ratio =
                    detail::lgamma_ratio(0.5 * s / kp, 0.5 * nu);
                primary = ratio.sign *
                          std::exp(std::log(s) - std::log(s + kp * nu) +
                                   std::lgamma(nu) - nu * std::log(2.0 * kp) +
                                   ratio.log_abs);
            }
            // Independent route: the same row through the deformed Gamma
            // at deformation kappa/s.
            const double alt = gamma_kappa(nu + 1.0, KappaParam(kp / s, false)) *
                               std::pow(s, 2.0 - nu) /
                               (nu * (s - kp * nu) * (s + kp * nu));
            if (scaled_residual(primary, alt) > 1e-11)
                throw Error("laplace_table(power): closed-form routes disagree "
                            "beyond 1e-11");
            return primary;
        };
        e.growth_bound = kp * nu;
        e.label = "power(nu=" + std::to_string(param) + ")";
        break;
    }
    case TableKind::monomial: {
        const long p = std::lround(param);
        if (p < 0 || param != static_cast<double>(p))
            throw DomainError(
                "laplace_table: monomial exponent must be a nonnegative integer");
        const double bound = kp * (static_cast<double>(p) + 1.0);
        e.f = [p](double t) { return std::pow(t, static_cast<double>(p)); };
        e.F = [p, kp, bound](double s) {
            require_above_bound(s, bound, "laplace_table(monomial)");
            if (p % 2 == 1) {
                double v = std::tgamma(static_cast<double>(p) + 1.0);
                for (long j = 1; j <= (p + 1) / 2; ++j)
                    v /= (s - 2.0 * j * kp) * (s + 2.0 * j * kp);
                return v;
            }
            double v = std::tgamma(static_cast<double>(p) + 1.0) * s;
            for (long j = 1; j <= p / 2 + 1; ++j) {
                const double odd = (2.0 * j - 1.0) * kp;
                v /= (s - odd) * (s + odd);
            }
            return v;
        };
        e.growth_bound = bound;
        e.label = "monomial(p=" + std::to_string(p) + ")";
        break;
    }
    }
    return e;
}

std::function<std::complex<double>(std::complex<double>)>
laplace_table_complex(TableKind kind, double param, const KappaParam& k) {
    require_not_nan(param, "laplace_table_complex");
    const double kp = k.value();
    using C = std::complex<double>;
    switch (kind) {
    case TableKind::dirac: {
        if (param < 0.0)
            throw DomainError("laplace_table_complex: dirac location must be >= 0");
        const double theta = deform_map(param, k);
        return [theta](C s) { return std::exp(-s * theta); };
    }
    case TableKind::heaviside: {
        if (param < 0.0)
            throw DomainError("laplace_table_complex: step location must be >= 0");
        const double tau = param;
        const double theta = deform_map(tau, k);
        const double root = std::sqrt(1.0 + kp * kp * tau * tau);
        return [theta, root, tau, kp](C s) {
            return (s * root + kp * kp * tau) / (s * s - kp * kp) *
                   std::exp(-s * theta);
        };
    }
    case TableKind::monomial: {
        const long p = std::lround(param);
        if (p < 0 || param != static_cast<double>(p))
            throw DomainError("laplace_table_complex: monomial exponent must be "
                              "a nonnegative integer");
        return [p, kp](C s) {
            if (p % 2 == 1) {
                C v = std::tgamma(static_cast<double>(p) + 1.0);
                for (long j = 1; j <= (p + 1) / 2; ++j)
                    v /= s * s - 4.0 * j * j * kp * kp;
                return v;
            }
            C v = s * std::tgamma(static_cast<double>(p) + 1.0);
            for (long j = 1; j <= p / 2 + 1; ++j) {
                const double odd = (2.0 * j - 1.0) * kp;
                v /= s * s - odd * odd;
            }
            return v;
        };
    }
    case TableKind::power:
        throw InputError(
            "laplace_table_complex: power row has no elementary complex form");
    }
    throw InputError("laplace_table_complex: unknown row");
}

double kappa_convolution(const Integrand& f, const Integrand& g, double t,
                         const KappaParam& k, const QuadratureSpec& spec) {
    require_not_nan(t, "kappa_convolution");
    if (!f || !g)
        throw InputError("kappa_convolution: needs two signals");
    if (t < 0.0)
        throw DomainError("kappa_convolution: requires t >= 0");
    if (t == 0.0)
        return 0.0;
    const double gt = lorentz_factor(t, k);
    const auto w = [&](double tau) {
        const double d = kappa_diff(t, tau, k);
        return f(d) * g(tau) * lorentz_factor(d, k) / gt;
    };
    return integrate(w, 0.0, t, spec).value;
}

PropertyCheck laplace_property_check(LaplaceProperty prop,
                                     const LaplacePropertyInput& in,
                                     const KappaParam& k, double tolerance,
                                     const QuadratureSpec& spec) {
    require_not_nan(in.s, "laplace_property_check");
    if (!in.f)
        throw InputError("laplace_property_check: needs a primary signal");
    const double kp = k.value();
    const double s = in.s;
    const Integrand& f = in.f;
    PropertyCheck out;
    switch (prop) {
    case LaplaceProperty::linearity: {
        if (!in.g)
            throw InputError("laplace_property_check: linearity needs g");
        const double a = in.a, b = in.b;
        const Integrand& g = in.g;
        const double bound = std::max(in.f_bound, in.g_bound);
        out.lhs = laplace_kappa([&](double t) { return a * f(t) + b * g(t); },
                                s, k, bound, spec);
        out.rhs = a * laplace_kappa(f, s, k, in.f_bound, spec) +
                  b * laplace_kappa(g, s, k, in.g_bound, spec);
        break;
    }
    case LaplaceProperty::scaling: {
        const double a = in.a;
        if (!(a > 0.0))
            throw DomainError("laplace_property_check: scaling needs a > 0");
        // kappa/a must stay physical; below a = 2 kappa the row is untested.
        if (a < 2.0 * kp)
            throw DomainError(
                "laplace_property_check: scaling checked only for a >= 2 kappa");
        out.lhs = laplace_kappa([&](double t) { return f(a * t); }, s, k,
                                in.f_bound, spec);
        out.rhs = laplace_kappa(f, s / a, KappaParam(kp / a), in.f_bound / a,
                                spec) / a;
        break;
    }
    case LaplaceProperty::modulation: {
        const double a = in.a;
        out.lhs = laplace_kappa(
            [&](double t) { return f(t) * std::exp(a * deform_map(t, k)); }, s,
            k, in.f_bound + a, spec);
        out.rhs = laplace_kappa(f, s - a, k, in.f_bound, spec);
        break;
    }
    case LaplaceProperty::derivative: {
        if (!in.df)
            throw InputError("laplace_property_check: derivative row needs df");
        out.lhs = laplace_kappa(in.df, s, k, in.f_bound, spec);
        out.rhs = s * laplace_kappa(
                          [&](double t) { return f(t) / lorentz_factor(t, k); },
                          s, k, in.f_bound, spec) -
                  f(0.0);
        break;
    }
    case LaplaceProperty::weighted_derivative: {
        if (!in.df)
            throw InputError(
                "laplace_property_check: weighted derivative row needs df");
        const Integrand& df = in.df;
        out.lhs = laplace_kappa(
            [&](double t) {
                const double gamma = lorentz_factor(t, k);
                return kp * kp * t / gamma * f(t) + gamma * df(t);
            },
            s, k, in.f_bound + kp, spec);
        out.rhs = s * laplace_kappa(f, s, k, in.f_bound, spec) - f(0.0);
        break;
    }
    case LaplaceProperty::weighted_integral: {
        if (!in.integral_f)
            throw InputError(
                "laplace_property_check: integral row needs the primitive");
        const Integrand& intf = in.integral_f;
        out.lhs = laplace_kappa(
            [&](double t) { return intf(t) / lorentz_factor(t, k); }, s, k,
            in.f_bound, spec);
        out.rhs = laplace_kappa(f, s, k, in.f_bound, spec) / s;
        break;
    }
    case LaplaceProperty::multiplication: {
        if (in.n < 1 || in.n > 2)
            throw InputError(
                "laplace_property_check: multiplication row supports n = 1, 2");
        const int n = in.n;
        out.lhs = laplace_kappa(
            [&](double t) { return f(t) * std::pow(deform_map(t, k), n); }, s,
            k, in.f_bound, spec);
        std::function<double(double)> F = in.F;
        if (!F) {
            const Integrand fc = f;
            const KappaParam kc = k;
            const double bc = in.f_bound;
            const QuadratureSpec sc = spec;
            F = [fc, kc, bc, sc](double w) {
                return laplace_kappa(fc, w, kc, bc, sc);
            };
        }
        // Five-point stencils; h shrinks near the growth bound so the
        // stencil never crosses it.
        double h = 0.02 * std::max(1.0, std::fabs(s));
        if (in.f_bound > 0.0)
            h = std::min(h, 0.25 * (s - in.f_bound));
        const double f2 = F(s + 2.0 * h), f1 = F(s + h);
        const double m1 = F(s - h), m2 = F(s - 2.0 * h);
        if (n == 1)
            out.rhs = -(-f2 + 8.0 * f1 - 8.0 * m1 + m2) / (12.0 * h);
        else
            out.rhs = (-f2 + 16.0 * f1 - 30.0 * F(s) + 16.0 * m1 - m2) /
                      (12.0 * h * h);
        break;
    }
    case LaplaceProperty::division: {
        if (in.n != 1)
            throw InputError(
                "laplace_property_check: division row implemented for n = 1");
        // f/{t} must stay integrable at the origin.
        if (std::fabs(f(1e-8)) > 1e-4)
            throw DomainError(
                "laplace_property_check: division row requires f(0) = 0");
        out.lhs = laplace_kappa(
            [&](double t) { return f(t) / deform_map(t, k); }, s, k,
            in.f_bound, spec);
        std::function<double(double)> F = in.F;
        QuadratureSpec outer = spec;
        if (!F) {
            const Integrand fc = f;
            const KappaParam kc = k;
            const double bc = in.f_bound;
            QuadratureSpec inner = spec;
            inner.rel_tol = std::max(spec.rel_tol, 1e-8);
            inner.max_subdivisions = std::min(spec.max_subdivisions, 400);
            F = [fc, kc, bc, inner](double w) {
                return laplace_kappa(fc, w, kc, bc, inner);
            };
            outer.rel_tol = std::max(outer.rel_tol, 1e-7);
        }
        out.rhs = integrate_tail([&](double w) { return F(w); }, s, k, outer)
                      .value;
        break;
    }
    }
    out.residual = scaled_residual(out.lhs, out.rhs);
    out.pass = out.residual <= tolerance;
    return out;
}

double limit_value_theorem(const Integrand& f, LimitKind kind,
                           const KappaParam& k, double growth_bound,
                           const QuadratureSpec& spec) {
    if (!f)
        throw InputError("limit_value_theorem: needs a signal");
    constexpr int kRungs = 6;
    std::vector<double> xs(kRungs), ys(kRungs);
    for (int j = 0; j < kRungs; ++j) {
        const double s = kind == LimitKind::initial ? 4.0 * std::pow(2.0, j)
                                                    : 0.5 * std::pow(2.0, -j);
        if (!(s > growth_bound))
            throw DomainError(
                "limit_value_theorem: growth bound blocks the s-ladder");
        xs[j] = kind == LimitKind::initial ? 1.0 / s : s;
        ys[j] = s * laplace_kappa(f, s, k, growth_bound, spec);
    }
    // Neville extrapolation of s F(s) to the ladder limit x = 0.
    std::vector<double> t = ys;
    double corner = t[0];
    double corner_prev = corner;
    for (int j = 1; j < kRungs; ++j) {
        for (int i = kRungs - 1; i >= j; --i)
            t[i] = t[i] + (t[i] - t[i - 1]) * xs[i] / (xs[i - j] - xs[i]);
        corner_prev = corner;
        corner = t[kRungs - 1];
    }
    if (!(std::fabs(corner - corner_prev) <=
          1e-5 * std::max(1.0, std::fabs(corner))))
        throw ConvergenceError(
            "limit_value_theorem: extrapolation ladder did not settle");
    return corner;
}

double bessel_kernel_check(double s, int m, const QuadratureSpec& spec) {
    require_not_nan(s, "bessel_kernel_check");
    if (s < 0.0)
        throw DomainError("bessel_kernel_check: requires s >= 0");
    if (m < 1 || m > 12)
        throw InputError("bessel_kernel_check: order must be in [1, 12]");
    const double dm = m;
    const auto h = [&](double u) {
        return bessel_j(m, u) / u * std::exp(-s * u / dm);
    };
    const auto breakpoint = [m](int i) { return bessel_j_zero(m, i + 1); };
    const double lhs = dm * integrate_oscillatory(h, 0.0, breakpoint, spec).value;
    const double rhs = exp_kappa(-s, KappaParam(1.0 / dm, false));
    return scaled_residual(lhs, rhs);
}

double inverse_laplace_kappa(
    const std::function<std::complex<double>(std::complex<double>)>& F,
    double t, const KappaParam& k, double contour_abscissa,
    const QuadratureSpec& spec) {
    require_not_nan(t, "inverse_laplace_kappa");
    if (!F)
        throw InputError("inverse_laplace_kappa: needs a transform handle");
    if (!(t > 0.0))
        throw DomainError("inverse_laplace_kappa: requires t > 0");
    const double theta = deform_map(t, k);
    const double c = contour_abscissa;
    const auto g = [&](double w) {
        return std::real(F(std::complex<double>(c, w))) * std::cos(w * theta);
    };
    const auto breakpoint = [theta](int i) { return (i + 0.5) * kPi / theta; };
    const double integral = integrate_oscillatory(g, 0.0, breakpoint, spec).value;
    return 2.0 * std::exp(c * theta) / (kPi * lorentz_factor(t, k)) * integral;
}

} // namespace kappa
