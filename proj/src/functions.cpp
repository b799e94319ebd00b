#include "kappa/functions.hpp"

#include "kappa/errors.hpp"
#include "kappa/gamma_ratio.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <string>

namespace kappa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// exp argument beyond which double range is exceeded.
constexpr double kLogOverflow = 690.0;

// Below this |kappa| the incomplete-Beta route for the truncated Mellin
// value collapses (both Beta terms tend to the same complete integral)
// and the defining integral is quadratured directly instead.
constexpr double kBetaRouteCut = 5e-4;

void require_not_nan(double x, const char* who) {
    if (std::isnan(x))
        throw InputError(std::string(who) + ": NaN input");
}

} // namespace

DeformationConstants deformation_constants(const KappaParam& k) {
    const double kp = k.value();
    if (kp >= 1.0)
        throw DomainError("deformation_constants: requires |kappa| < 1");
    DeformationConstants c;
    c.gamma = 1.0 / std::sqrt((1.0 - kp) * (1.0 + kp));
    // (1+kappa)/(1-kappa) = 1 + 2 kappa/(1-kappa), so the log stays
    // accurate as kappa -> 0 and the exponent tends to 1 smoothly.
    c.epsilon = kp == 0.0
                    ? std::exp(1.0)
                    : std::exp(std::log1p(2.0 * kp / (1.0 - kp)) / (2.0 * kp));
    return c;
}

double exp_kappa(double x, const KappaParam& k) {
    return std::exp(deform_map(x, k));
}

double ln_kappa(double x, const KappaParam& k) {
    require_not_nan(x, "ln_kappa");
    if (x <= 0.0)
        throw DomainError("ln_kappa: requires x > 0");
    return deform_inv(std::log(x), k);
}

XiPolynomialTable::XiPolynomialTable(int n_max, const KappaParam& k) {
    if (n_max < 0)
        throw InputError("XiPolynomialTable: order must be nonnegative");
    const double kp = k.value();
    values_.assign(static_cast<std::size_t>(n_max) + 1, 1.0);
    for (int n = 0; n + 2 <= n_max; ++n) {
        const double u = kp * n;
        values_[n + 2] = (1.0 - u * u) * values_[n];
    }
    if (kp == 0.0) {
        positive_limit_ = INT_MAX;
    } else {
        const double lim = 2.0 + 1.0 / kp;
        positive_limit_ = lim >= static_cast<double>(INT_MAX)
                              ? INT_MAX
                              : static_cast<int>(std::ceil(lim)) - 1;
    }
}

double XiPolynomialTable::at(int n) const {
    if (n < 0 || n >= static_cast<int>(values_.size()))
        throw InputError("XiPolynomialTable: index " + std::to_string(n) +
                         " outside table of order " + std::to_string(order()));
    return values_[static_cast<std::size_t>(n)];
}

double xi_poly(int n, const KappaParam& k) {
    if (n < 0)
        throw InputError("xi_poly: order must be nonnegative");
    const double kp = k.value();
    double v = 1.0;
    for (int j = n - 2; j >= 1; j -= 2) {
        const double u = kp * j;
        v *= (1.0 - u) * (1.0 + u);
    }
    return v;
}

double kappa_factorial(int n, const KappaParam& k) {
    if (n < 0)
        throw InputError("kappa_factorial: order must be nonnegative");
    const double kp = k.value();
    for (int j = n - 2; j >= 1; j -= 2) {
        if (std::fabs(kp * j - 1.0) < 4.0 * kEps)
            throw PoleError("kappa_factorial: kappa = 1/" + std::to_string(j) +
                                " annihilates a factor of xi_" + std::to_string(n),
                            j);
    }
    const double nf = std::tgamma(n + 1.0);
    if (!std::isfinite(nf))
        throw OverflowError("kappa_factorial: " + std::to_string(n) +
                            "! exceeds double range");
    return nf / xi_poly(n, k);
}

double exp_kappa_taylor(double x, const KappaParam& k, int n_terms,
                        int* terms_used) {
    require_not_nan(x, "exp_kappa_taylor");
    if (n_terms < 1)
        throw InputError("exp_kappa_taylor: need at least one term");
    const double kp = k.value();
    if (kp * kp * x * x >= 1.0)
        throw DomainError("exp_kappa_taylor: series requires kappa^2 x^2 < 1");
    // Terms obey T_{m} = T_{m-2} x^2 (1 - (m-2)^2 kappa^2)/((m-1) m) with
    // T_0 = 1, T_1 = x, so even and odd lanes recurse independently.
    double lane[2] = {1.0, x};
    double sum = 1.0;
    int used = 1;
    for (int m = 1; m < n_terms; ++m) {
        if (m >= 2) {
            const double j = static_cast<double>(m - 2);
            lane[m % 2] *= x * x * (1.0 - j * j * kp * kp) / ((m - 1.0) * m);
        }
        sum += lane[m % 2];
        ++used;
        if (m >= 2 && std::fabs(lane[0]) <= kEps * std::fabs(sum) &&
            std::fabs(lane[1]) <= kEps * std::fabs(sum))
            break;
    }
    if (terms_used)
        *terms_used = used;
    return sum;
}

double ln_kappa_taylor_coefficient(int n, const KappaParam& k) {
    if (n < 1)
        throw InputError("ln_kappa_taylor_coefficient: index starts at 1");
    const double kp = k.value();
    double pm = 1.0, pp = 1.0;
    for (int j = 1; j < n; ++j) {
        pm *= 1.0 - kp / j;
        pp *= 1.0 + kp / j;
    }
    return 0.5 * (pm + pp);
}

double ln_kappa_taylor(double x, const KappaParam& k, int n_terms,
                       int* terms_used) {
    require_not_nan(x, "ln_kappa_taylor");
    if (n_terms < 1)
        throw InputError("ln_kappa_taylor: need at least one term");
    if (x <= -1.0 || x > 1.0)
        throw DomainError("ln_kappa_taylor: series requires -1 < x <= 1");
    const double kp = k.value();
    // The running products are the two halves of the coefficient
    // b_n = (prod_{j<n}(1 - kappa/j) + prod_{j<n}(1 + kappa/j))/2.
    double pm = 1.0, pp = 1.0, powx = x, sign = 1.0, sum = 0.0;
    int used = 0;
    for (int n = 1; n <= n_terms; ++n) {
        const double term = sign * 0.5 * (pm + pp) * powx / n;
        sum += term;
        ++used;
        if (n > 1 && std::fabs(term) <= kEps * std::fabs(sum))
            break;
        pm *= 1.0 - kp / n;
        pp *= 1.0 + kp / n;
        powx *= x;
        sign = -sign;
    }
    if (terms_used)
        *terms_used = used;
    return sum;
}

double product_expansion_coefficient(int n) {
    if (n < 0)
        throw InputError("product_expansion_coefficient: index must be nonnegative");
    double c = 1.0;
    for (int m = 0; m < n; ++m)
        c *= -((2.0 * m + 1.0) * (2.0 * m + 1.0)) /
             (2.0 * (m + 1.0) * (2.0 * m + 3.0));
    return c;
}

double exp_kappa_product_expansion(double x, const KappaParam& k, int n_factors) {
    require_not_nan(x, "exp_kappa_product_expansion");
    if (n_factors < 0)
        throw InputError("exp_kappa_product_expansion: need at least one factor");
    const double kp = k.value();
    const double u2 = kp * kp * x * x;
    if (u2 > 1.0)
        throw DomainError(
            "exp_kappa_product_expansion: factorization requires kappa^2 x^2 <= 1");
    // Factor n is exp(c_n kappa^(2n) x^(2n+1)); summing the exponents
    // first leaves a single rounding in the final exp.
    double c = 1.0, pw = x, s = 0.0;
    for (int n = 0; n <= n_factors; ++n) {
        s += c * pw;
        c *= -((2.0 * n + 1.0) * (2.0 * n + 1.0)) /
             (2.0 * (n + 1.0) * (2.0 * n + 3.0));
        pw *= u2;
    }
    return std::exp(s);
}

double gamma_kappa(double x, const KappaParam& k) {
    require_not_nan(x, "gamma_kappa");
    if (detail::near_nonpositive_integer(x))
        throw PoleError("gamma_kappa: pole at nonpositive integer argument",
                        std::llround(x));
    const double kp = k.value();
    if (kp == 0.0)
        return std::tgamma(x);
    const double c = 0.5 / kp;
    const double d = 0.5 * (x - 1.0);
    // Gamma(w+1) Gamma(x) / Gamma(b) with w = c - d, b = c + d. Writing the
    // numerator as Gamma(w+1) instead of w*Gamma(w) keeps the w = 0 case
    // (x at the boundary 1 + 1/kappa) finite instead of 0 * inf.
    const double w = c - d;
    const double b = c + d;
    if (detail::near_nonpositive_integer(w + 1.0))
        throw PoleError("gamma_kappa: 1/(2|kappa|) - (x-1)/2 at a negative integer",
                        std::llround(x));
    if (detail::near_nonpositive_integer(b))
        return 0.0;
    if (c >= 1000.0 && std::fabs(d) <= 0.25 * c) {
        // The (2|kappa|)^(2-x) prefactor cancels the c^(2d) growth of the
        // Gamma ratio analytically; what is left is free of the huge
        // cancelling logs that sink the direct route as kappa -> 0.
        const detail::SignedLog sx = detail::slgamma(x);
        return sx.sign * std::exp(sx.log_abs + std::log1p(-d / c) +
                                  detail::lgamma_ratio_excess(c, d));
    }
    const detail::SignedLog sw = detail::slgamma(w + 1.0);
    const detail::SignedLog sx = detail::slgamma(x);
    const detail::SignedLog sb = detail::slgamma(b);
    const double lg = (2.0 - x) * std::log(2.0 * kp) + sw.log_abs + sx.log_abs -
                      sb.log_abs;
    return sw.sign * sx.sign * sb.sign * std::exp(lg);
}

double mellin_kappa(double r, const KappaParam& k) {
    require_not_nan(r, "mellin_kappa");
    if (r <= 0.0)
        throw DomainError("mellin_kappa: requires r > 0");
    const double kp = k.value();
    if (kp == 0.0)
        return std::tgamma(r);
    if (kp * r >= 1.0)
        throw DomainError("mellin_kappa: integral diverges for r >= 1/|kappa|");
    const detail::SignedLog ratio = detail::lgamma_ratio(0.5 / kp, 0.5 * r);
    const double lg = -r * std::log(2.0 * kp) - std::log1p(kp * r) +
                      ratio.log_abs + std::lgamma(r);
    return ratio.sign * std::exp(lg);
}

double incomplete_beta(double x, double s, double r, const QuadratureSpec& spec) {
    require_not_nan(x, "incomplete_beta");
    require_not_nan(s, "incomplete_beta");
    require_not_nan(r, "incomplete_beta");
    if (!(s > 0.0) || !(r > 0.0))
        throw DomainError("incomplete_beta: requires s > 0 and r > 0");
    if (x < 0.0 || x > 1.0)
        throw DomainError("incomplete_beta: requires 0 <= x <= 1");
    if (x == 0.0)
        return 0.0;
    double total = 0.0;
    const double mid = std::min(x, 0.5);
    if (s < 1.0) {
        // y = z^(1/s) absorbs the y^(s-1) weight exactly; the remaining
        // factor is bounded on the lower half.
        const auto g = [&](double z) {
            return std::pow(1.0 - std::pow(z, 1.0 / s), r - 1.0);
        };
        total += integrate(g, 0.0, std::pow(mid, s), spec).value / s;
    } else {
        const auto g = [&](double y) {
            return std::pow(y, s - 1.0) * std::pow(1.0 - y, r - 1.0);
        };
        total += integrate(g, 0.0, mid, spec).value;
    }
    if (x > 0.5) {
        if (r < 1.0) {
            // Mirrored substitution z = (1-y)^r for the upper endpoint.
            const auto g = [&](double z) {
                return std::pow(1.0 - std::pow(z, 1.0 / r), s - 1.0);
            };
            total += integrate(g, std::pow(1.0 - x, r), std::pow(0.5, r), spec)
                         .value /
                     r;
        } else {
            const auto g = [&](double y) {
                return std::pow(y, s - 1.0) * std::pow(1.0 - y, r - 1.0);
            };
            total += integrate(g, 0.5, x, spec).value;
        }
    }
    return total;
}

double mellin_kappa_incomplete(double r, double x, const KappaParam& k,
                               const QuadratureSpec& spec) {
    require_not_nan(r, "mellin_kappa_incomplete");
    require_not_nan(x, "mellin_kappa_incomplete");
    if (x < 0.0)
        throw DomainError("mellin_kappa_incomplete: requires x >= 0");
    if (r <= 0.0)
        throw DomainError("mellin_kappa_incomplete: requires r > 0");
    const double kp = k.value();
    if (kp != 0.0 && kp * r >= 1.0)
        throw DomainError("mellin_kappa_incomplete: requires r < 1/|kappa|");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return mellin_kappa(r, k);
    if (kp >= kBetaRouteCut) {
        const double log_pref = -r * std::log(2.0 * kp);
        if (log_pref < kLogOverflow) {
            const double u = kp * x;
            // X = (sqrt(1+u^2) - u)^2 via the reciprocal form, which keeps
            // full precision for large u where the difference cancels.
            const double root = 1.0 / (std::sqrt(1.0 + u * u) + u);
            const double X = root * root;
            const double a = 0.5 / kp - 0.5 * r;
            return mellin_kappa(r, k) -
                   0.5 * std::exp(log_pref) *
                       (incomplete_beta(X, a, r, spec) +
                        incomplete_beta(X, a + 1.0, r, spec));
        }
    }
    // Defining integral with t = z^(1/r); the substitution absorbs the
    // t^(r-1) weight so the integrand is bounded near zero for every r.
    const auto g = [&](double z) { return exp_kappa(-std::pow(z, 1.0 / r), k); };
    return integrate(g, 0.0, std::pow(x, r), spec).value / r;
}

double gamma_kappa_incomplete(double r, double x, const KappaParam& k,
                              GammaTail tail, const QuadratureSpec& spec) {
    require_not_nan(r, "gamma_kappa_incomplete");
    require_not_nan(x, "gamma_kappa_incomplete");
    if (x < 0.0)
        throw DomainError("gamma_kappa_incomplete: requires x >= 0");
    const double kp = k.value();
    if (r <= 1.0 || (kp != 0.0 && kp * (r - 1.0) >= 1.0))
        throw DomainError(
            "gamma_kappa_incomplete: requires 1 < r < 1 + 1/|kappa|");
    const double rm = r - 1.0;
    const double pref = rm * (1.0 - kp * kp * rm * rm);
    if (tail == GammaTail::lower)
        return pref * mellin_kappa_incomplete(rm, x, k, spec);
    if (x == 0.0)
        return gamma_kappa(r, k);
    const auto g = [&](double t) {
        // t^(r-2) exp_kappa(-t) assembled in log space; the factors reach
        // the ends of double range separately long before their product.
        return std::exp((r - 2.0) * std::log(t) - deform_map(t, k));
    };
    return pref * integrate_tail(g, x, k, spec).value;
}

namespace {

// log(deform_inv(u, k)) assembled without overflowing sinh; beyond
// z = 350 the e^(-z) half of sinh is below double resolution.
double log_deform_inv(double u, double kp) {
    if (kp == 0.0)
        return std::log(u);
    const double z = kp * u;
    if (z > 350.0)
        return z - std::log(2.0 * kp);
    return std::log(std::sinh(z) / kp);
}

} // namespace

double ln_kappa_gamma_integral(double x, const KappaParam& k,
                               const QuadratureSpec& spec) {
    require_not_nan(x, "ln_kappa_gamma_integral");
    const double kp = k.value();
    if (x <= 0.0 || (kp != 0.0 && kp * (x - 1.0) >= 1.0))
        throw DomainError(
            "ln_kappa_gamma_integral: requires 0 < x < 1 + 1/|kappa|");
    // Evaluated after t = exp(-u): the integrand turns into the
    // exponentially decaying [u]^(x-1) exp(-u) instead of carrying a
    // power singularity at t = 0. Assembled in log space; the bracket
    // alone overflows long before the damped product does.
    const auto g = [&](double u) {
        return std::exp((x - 1.0) * log_deform_inv(u, kp) - u);
    };
    QuadratureSpec tail_spec = spec;
    tail_spec.tail = TailStrategy::exp_map;
    const double pref = 1.0 - kp * kp * (x - 1.0) * (x - 1.0);
    return pref * integrate_tail(g, 0.0, k, tail_spec).value;
}

double kappa_factorial_ratio_form(int n, const KappaParam& k,
                                  const QuadratureSpec& spec) {
    if (n < 1)
        throw InputError("kappa_factorial_ratio_form: order must be positive");
    const double kp = k.value();
    if (kp * n >= 1.0)
        throw DomainError("kappa_factorial_ratio_form: requires n < 1/|kappa|");
    // Both integrals are evaluated after t = exp(-u), where they decay
    // exponentially with no endpoint singularity; log-space assembly
    // keeps the brackets from overflowing before the damping lands.
    const auto num = [&](double u) {
        return std::exp(n * log_deform_inv(u, kp) - u);
    };
    const auto den = [&](double u) {
        return std::exp(log_deform_inv(n * u, kp) - u);
    };
    QuadratureSpec tail_spec = spec;
    tail_spec.tail = TailStrategy::exp_map;
    return n * integrate_tail(num, 0.0, k, tail_spec).value /
           integrate_tail(den, 0.0, k, tail_spec).value;
}

} // namespace kappa
