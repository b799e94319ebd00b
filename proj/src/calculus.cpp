#include "kappa/calculus.hpp"

#include "kappa/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kappa {

namespace {

void require_not_nan(double x, const char* who) {
    if (std::isnan(x))
        throw InputError(std::string(who) + ": NaN input");
}

} // namespace

double lorentz_factor(double x, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "lorentz_factor");
    const double u = k.value() * x;
    if (kind == DeformKind::hyperbolic)
        return std::sqrt(1.0 + u * u);
    if (std::fabs(u) > 1.0)
        throw DomainError("lorentz_factor: cyclic weight requires |kappa*x| <= 1");
    return std::sqrt((1.0 - u) * (1.0 + u));
}

double kappa_derivative_exact(double fprime, double x, const KappaParam& k,
                              DeformKind kind) {
    require_not_nan(fprime, "kappa_derivative_exact");
    return lorentz_factor(x, k, kind) * fprime;
}

double kappa_derivative(const Integrand& f, double x, const KappaParam& k,
                        DeformKind kind) {
    require_not_nan(x, "kappa_derivative");
    double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
               std::max(1.0, std::fabs(x));
    // Snap h so that x + h and x - h straddle x by the same representable
    // amount; removes the leading roundoff term of the centered difference.
    volatile const double xph = x + h;
    h = xph - x;
    const double fprime = (f(x + h) - f(x - h)) / (2.0 * h);
    return lorentz_factor(x, k, kind) * fprime;
}

double kappa_integral(const Integrand& f, double a, double b,
                      const KappaParam& k, DeformKind kind,
                      const QuadratureSpec& spec) {
    require_not_nan(a, "kappa_integral");
    if (std::isnan(b))
        throw InputError("kappa_integral: NaN input");
    const auto g = [&](double t) { return f(t) / lorentz_factor(t, k, kind); };
    if (std::isinf(b)) {
        if (b < 0.0)
            throw DomainError("kappa_integral: lower-unbounded range not supported");
        if (kind != DeformKind::hyperbolic)
            throw DomainError(
                "kappa_integral: infinite range requires the hyperbolic measure");
        return integrate_tail(g, a, k, spec).value;
    }
    const double kv = k.value();
    if (kind == DeformKind::cyclic && kv > 0.0) {
        // Substitute x = sin(kappa*theta)/kappa: the weight 1/gamma is
        // absorbed into the measure, and the mapped integrand stays
        // bounded even when the range touches the edge |kappa*x| = 1
        // where the weight itself blows up.
        const double ua = kv * a;
        const double ub = kv * b;
        if (std::fabs(ua) > 1.0 || std::fabs(ub) > 1.0)
            throw DomainError("kappa_integral: cyclic weight requires |kappa*x| <= 1");
        const auto h = [&](double theta) { return f(std::sin(kv * theta) / kv); };
        return integrate(h, std::asin(ua) / kv, std::asin(ub) / kv, spec).value;
    }
    return integrate(g, a, b, spec).value;
}

double kinetic_energy(double x, const KappaParam& k) {
    require_not_nan(x, "kinetic_energy");
    const double u = k.value() * x;
    return x * x / (1.0 + std::sqrt(1.0 + u * u));
}

} // namespace kappa
