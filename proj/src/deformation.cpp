#include "kappa/deformation.hpp"

#include <cmath>
#include <string>

namespace kappa {

namespace {

// Threshold below which arcsinh(u)/u, sinh(u)/u, ... are evaluated by their
// even Maclaurin prefixes. At |u| = 1e-4 the first omitted term is ~1e-25
// relative, far below double roundoff.
constexpr double kSeriesCut = 1e-4;

double asinh_over_u(double u) {
    // arcsinh(u)/u = 1 - u^2/6 + 3u^4/40 - ...
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + 3.0 * u2 * u2 / 40.0;
}

double asin_over_u(double u) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 + 3.0 * u2 * u2 / 40.0;
}

double sinh_over_u(double u) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 + u2 * u2 / 120.0;
}

double sin_over_u(double u) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
}

void require_not_nan(double x, const char* who) {
    if (std::isnan(x))
        throw InputError(std::string(who) + ": NaN input");
}

// sinh argument beyond which the result overflows double range.
constexpr double kSinhOverflow = 700.0;

} // namespace

KappaParam::KappaParam(double kappa, bool physical)
    : kappa_(std::fabs(kappa)), physical_(physical) {
    if (!std::isfinite(kappa))
        throw InputError("KappaParam: deformation parameter must be finite");
    if (physical_ && kappa_ >= 1.0)
        throw DomainError("KappaParam: physical parameter requires |kappa| < 1");
}

double deform_map(double x, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "deform_map");
    const double kp = k.value();
    if (kp == 0.0)
        return x;
    const double u = kp * x;
    if (kind == DeformKind::hyperbolic) {
        if (std::fabs(u) < kSeriesCut)
            return x * asinh_over_u(u);
        return std::asinh(u) / kp;
    }
    if (std::fabs(u) > 1.0)
        throw DomainError("deform_map: cyclic map requires |kappa*x| <= 1");
    if (std::fabs(u) < kSeriesCut)
        return x * asin_over_u(u);
    return std::asin(u) / kp;
}

double deform_inv(double x, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "deform_inv");
    const double kp = k.value();
    if (kp == 0.0)
        return x;
    const double u = kp * x;
    if (std::fabs(u) < kSeriesCut)
        return x * (kind == DeformKind::hyperbolic ? sinh_over_u(u) : sin_over_u(u));
    return (kind == DeformKind::hyperbolic ? std::sinh(u) : std::sin(u)) / kp;
}

double kappa_sum(double x, double y, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "kappa_sum");
    require_not_nan(y, "kappa_sum");
    const double kp = k.value();
    if (kp == 0.0)
        return x + y;
    const double kx = kp * x, ky = kp * y;
    if (kind == DeformKind::hyperbolic)
        return x * std::sqrt(1.0 + ky * ky) + y * std::sqrt(1.0 + kx * kx);
    if (std::fabs(kx) > 1.0 || std::fabs(ky) > 1.0)
        throw DomainError("kappa_sum: cyclic sum requires |kappa*x|, |kappa*y| <= 1");
    return x * std::sqrt(1.0 - ky * ky) + y * std::sqrt(1.0 - kx * kx);
}

double kappa_diff(double x, double y, const KappaParam& k, DeformKind kind) {
    return kappa_sum(x, -y, k, kind);
}

double kappa_prod(double x, double y, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "kappa_prod");
    require_not_nan(y, "kappa_prod");
    const double kp = k.value();
    if (kp == 0.0)
        return x * y;
    // [ {x}{y} ]: generator argument is {x}*{y}*kappa = arcX(kx)*arcX(ky)/kappa.
    const double u = deform_map(x, k, kind);
    const double v = deform_map(y, k, kind);
    const double arg = kp * u * v;
    if (kind == DeformKind::hyperbolic) {
        if (std::fabs(arg) > kSinhOverflow)
            throw OverflowError("kappa_prod: sinh argument " + std::to_string(arg) +
                                " exceeds double range");
        return std::sinh(arg) / kp;
    }
    return std::sin(arg) / kp;
}

double kappa_prod_identity(const KappaParam& k, DeformKind kind) {
    return deform_inv(1.0, k, kind);
}

double kappa_prod_inverse(double x, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "kappa_prod_inverse");
    if (x == 0.0)
        throw DomainError("kappa_prod_inverse: zero has no deformed reciprocal");
    if (k.is_zero())
        return 1.0 / x;
    const double u = deform_map(x, k, kind);
    const double arg = k.value() / u;
    if (kind == DeformKind::hyperbolic && std::fabs(arg) > kSinhOverflow)
        throw OverflowError("kappa_prod_inverse: sinh argument " + std::to_string(arg) +
                            " exceeds double range");
    return (kind == DeformKind::hyperbolic ? std::sinh(arg) : std::sin(arg)) / k.value();
}

double kappa_div(double x, double y, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "kappa_div");
    require_not_nan(y, "kappa_div");
    if (y == 0.0)
        throw DomainError("kappa_div: division by zero");
    if (k.is_zero())
        return x / y;
    const double u = deform_map(x, k, kind);
    const double v = deform_map(y, k, kind);
    const double arg = k.value() * u / v;
    if (kind == DeformKind::hyperbolic && std::fabs(arg) > kSinhOverflow)
        throw OverflowError("kappa_div: sinh argument " + std::to_string(arg) +
                            " exceeds double range");
    return (kind == DeformKind::hyperbolic ? std::sinh(arg) : std::sin(arg)) / k.value();
}

double kappa_nfold_sum(long n, double x, const KappaParam& k, DeformKind kind) {
    require_not_nan(x, "kappa_nfold_sum");
    if (n == 0)
        return 0.0;
    if (k.is_zero())
        return static_cast<double>(n) * x;
    const double u = static_cast<double>(n) * deform_map(x, k, kind);
    const double arg = k.value() * u;
    if (kind == DeformKind::hyperbolic && std::fabs(arg) > kSinhOverflow)
        throw OverflowError("kappa_nfold_sum: sinh argument " + std::to_string(arg) +
                            " exceeds double range");
    return deform_inv(u, k, kind);
}

} // namespace kappa
