#include "kappa/gamma_ratio.hpp"

#include "kappa/errors.hpp"

#include <cmath>
#include <limits>

namespace kappa::detail {

double sin_pi(double x) {
    const double k = std::round(x);
    const double r = x - k;
    const double s = std::sin(M_PI * r);
    return (std::fmod(std::fabs(k), 2.0) == 1.0) ? -s : s;
}

bool near_nonpositive_integer(double x) {
    if (x > 0.5)
        return false;
    const double n = std::round(x);
    const double eps = std::numeric_limits<double>::epsilon();
    return std::fabs(x - n) <= 4.0 * eps * std::max(1.0, std::fabs(x));
}

SignedLog slgamma(double x) {
    if (x > 0.0)
        return {std::lgamma(x), 1.0};
    if (near_nonpositive_integer(x))
        throw PoleError("gamma pole at nonpositive integer", static_cast<long>(std::round(x)));
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    const double s = sin_pi(x);
    const double log_abs = std::log(M_PI) - std::log(std::fabs(s)) - std::lgamma(1.0 - x);
    return {log_abs, s > 0.0 ? 1.0 : -1.0};
}

double lgamma_ratio_excess(double c, double d) {
    const double u = d / c;
    // L = log((c-d)/(c+d)); the two log1p halves reinforce, no cancellation.
    const double L = std::log1p(-u) - std::log1p(u);
    // S = c*L + 2d = -2d * sum_{k>=1} u^{2k}/(2k+1), summed directly.
    const double u2 = u * u;
    double S = 0.0, p = u2;
    for (int k = 1; k < 60; ++k) {
        const double term = p / (2 * k + 1);
        S += term;
        if (term < 1e-20 * (S + 1e-300))
            break;
        p *= u2;
    }
    S *= -2.0 * d;
    // Bernoulli tail of Stirling, with the differences of negative powers
    // expanded so that no subtraction of near-equal quantities occurs.
    const double ab = (c - d) * (c + d);
    const double c2 = c * c, d2 = d * d;
    const double ab3 = ab * ab * ab;
    const double ab5 = ab3 * ab * ab;
    const double ab7 = ab5 * ab * ab;
    double bern = d / (6.0 * ab);
    bern -= d * (3.0 * c2 + d2) / (180.0 * ab3);
    bern += d * (5.0 * c2 * c2 + 10.0 * c2 * d2 + d2 * d2) / (630.0 * ab5);
    bern -= d * (7.0 * c2 * c2 * c2 + 35.0 * c2 * c2 * d2 + 21.0 * c2 * d2 * d2 + d2 * d2 * d2) /
            (840.0 * ab7);
    return S - d * std::log1p(-u2) - 0.5 * L + bern;
}

SignedLog lgamma_ratio(double c, double d) {
    if (c - d > 0.0 && c >= 1000.0 && std::fabs(d) <= 0.25 * c)
        return {lgamma_ratio_excess(c, d) - 2.0 * d * std::log(c), 1.0};
    const SignedLog num = slgamma(c - d);
    const SignedLog den = slgamma(c + d);
    return {num.log_abs - den.log_abs, num.sign * den.sign};
}

} // namespace kappa::detail
