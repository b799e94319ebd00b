#include "kappa/trig.hpp"

#include "kappa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kappa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

void require_not_nan(double x, const char* who) {
    if (std::isnan(x))
        throw InputError(std::string(who) + ": NaN input");
}

// Poles sit at (m + 1/2) pi for tan and at m pi for cot; the test is on
// the composed angle, so it covers every kappa uniformly.
void require_off_pole(double angle, bool half_shift, const char* who) {
    const double shift = half_shift ? 0.5 : 0.0;
    const double m = std::round(angle / kPi - shift);
    const double pole = (m + shift) * kPi;
    if (std::fabs(angle - pole) <= 4.0 * kEps * std::max(1.0, std::fabs(angle)))
        throw PoleError(std::string(who) + ": angle within ulps of a pole",
                        static_cast<long>(m));
}

} // namespace

double trig_kappa(TrigFn fn, double x, const KappaParam& k) {
    require_not_nan(x, "trig_kappa");
    switch (fn) {
    case TrigFn::sinh:
        return std::sinh(deform_map(x, k));
    case TrigFn::cosh:
        return std::cosh(deform_map(x, k));
    case TrigFn::tanh:
        return std::tanh(deform_map(x, k));
    case TrigFn::coth: {
        const double t = deform_map(x, k);
        if (std::fabs(t) <= 4.0 * kEps)
            throw PoleError("trig_kappa: coth pole at zero", 0);
        return 1.0 / std::tanh(t);
    }
    case TrigFn::sin:
        return std::sin(deform_map(x, k, DeformKind::cyclic));
    case TrigFn::cos:
        return std::cos(deform_map(x, k, DeformKind::cyclic));
    case TrigFn::tan: {
        const double t = deform_map(x, k, DeformKind::cyclic);
        require_off_pole(t, true, "trig_kappa(tan)");
        return std::tan(t);
    }
    case TrigFn::cot: {
        const double t = deform_map(x, k, DeformKind::cyclic);
        require_off_pole(t, false, "trig_kappa(cot)");
        return std::cos(t) / std::sin(t);
    }
    }
    throw InputError("trig_kappa: unknown function selector");
}

double inv_trig_kappa(InvTrigFn fn, double x, const KappaParam& k) {
    require_not_nan(x, "inv_trig_kappa");
    double angle = 0.0;
    DeformKind kind = DeformKind::hyperbolic;
    switch (fn) {
    case InvTrigFn::asinh:
        angle = std::asinh(x);
        break;
    case InvTrigFn::acosh:
        if (x < 1.0)
            throw DomainError("inv_trig_kappa: acosh requires x >= 1");
        angle = std::acosh(x);
        break;
    case InvTrigFn::atanh:
        if (std::fabs(x) >= 1.0)
            throw DomainError("inv_trig_kappa: atanh requires |x| < 1");
        angle = std::atanh(x);
        break;
    case InvTrigFn::acoth:
        if (std::fabs(x) <= 1.0)
            throw DomainError("inv_trig_kappa: acoth requires |x| > 1");
        angle = std::atanh(1.0 / x);
        break;
    case InvTrigFn::asin:
        if (std::fabs(x) > 1.0)
            throw DomainError("inv_trig_kappa: asin requires |x| <= 1");
        angle = std::asin(x);
        kind = DeformKind::cyclic;
        break;
    case InvTrigFn::acos:
        if (std::fabs(x) > 1.0)
            throw DomainError("inv_trig_kappa: acos requires |x| <= 1");
        angle = std::acos(x);
        kind = DeformKind::cyclic;
        break;
    case InvTrigFn::atan:
        angle = std::atan(x);
        kind = DeformKind::cyclic;
        break;
    case InvTrigFn::acot:
        angle = std::atan2(1.0, x);
        kind = DeformKind::cyclic;
        break;
    }
    return deform_inv(angle, k, kind);
}

double sinh_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::sinh, x, k); }
double cosh_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::cosh, x, k); }
double tanh_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::tanh, x, k); }
double coth_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::coth, x, k); }
double sin_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::sin, x, k); }
double cos_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::cos, x, k); }
double tan_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::tan, x, k); }
double cot_kappa(double x, const KappaParam& k) { return trig_kappa(TrigFn::cot, x, k); }

double asinh_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::asinh, x, k); }
double acosh_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::acosh, x, k); }
double atanh_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::atanh, x, k); }
double acoth_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::acoth, x, k); }
double asin_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::asin, x, k); }
double acos_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::acos, x, k); }
double atan_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::atan, x, k); }
double acot_kappa(double x, const KappaParam& k) { return inv_trig_kappa(InvTrigFn::acot, x, k); }

double de_moivre_kappa(double x, double r, const KappaParam& k) {
    require_not_nan(x, "de_moivre_kappa");
    require_not_nan(r, "de_moivre_kappa");
    if (r == 0.0)
        throw DomainError("de_moivre_kappa: exponent must be nonzero");
    const double lhs = std::pow(cosh_kappa(x, k) + sinh_kappa(x, k), r);
    // The half-deformed side; the deformation is even in kappa, so the
    // sign of kappa/r is immaterial.
    const KappaParam kr(k.value() / std::fabs(r), false);
    const double rhs = cosh_kappa(r * x, kr) + sinh_kappa(r * x, kr);
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (std::fabs(lhs - rhs) > 1e-11 * scale)
        throw Error("de_moivre_kappa: evaluation routes disagree beyond 1e-11");
    return rhs;
}

} // namespace kappa
