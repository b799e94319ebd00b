#pragma once

#include "kappa/deformation.hpp"
#include "kappa/quadrature.hpp"

#include <vector>

namespace kappa {

// gamma = 1/sqrt(1 - kappa^2) and the deformed Napier number
// epsilon = ((1+kappa)/(1-kappa))^(1/2kappa) = exp_kappa(gamma).
// Requires |kappa| < 1; both reduce to 1 and e at kappa = 0.
struct DeformationConstants {
    double gamma;
    double epsilon;
};

DeformationConstants deformation_constants(const KappaParam& k);

// exp_kappa(x) = (sqrt(1 + kappa^2 x^2) + kappa*x)^(1/kappa), evaluated in
// log space as exp({x}). Positive, exp_kappa(0) = 1 exactly, overflows to
// +inf like any exp; never NaN for finite x.
double exp_kappa(double x, const KappaParam& k);

// ln_kappa(x) = (x^kappa - x^(-kappa))/(2 kappa) = [ln x], for x > 0.
double ln_kappa(double x, const KappaParam& k);

// xi_0 = xi_1 = xi_2 = 1, xi_{n+2} = (1 - n^2 kappa^2) xi_n.
// The deformed factorial is n!/xi_n and gamma_kappa interpolates it.
class XiPolynomialTable {
public:
    XiPolynomialTable(int n_max, const KappaParam& k);

    double at(int n) const;
    int order() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

    // Largest N with N < 2 + 1/|kappa|; xi_n > 0 for every n <= N.
    // Beyond it the sign pattern repeats - - + +.
    int positive_limit() const { return positive_limit_; }

private:
    std::vector<double> values_;
    int positive_limit_;
};

double xi_poly(int n, const KappaParam& k);

// n!_kappa = n!/xi_n(kappa). Throws PoleError with the offending integer m
// when kappa = 1/m makes a factor of xi_n vanish.
double kappa_factorial(int n, const KappaParam& k);

// Partial sum of sum_n x^n / n!_kappa, convergent for kappa^2 x^2 < 1.
// Stops early once a term drops below roundoff of the running sum;
// terms_used reports how many terms were taken.
double exp_kappa_taylor(double x, const KappaParam& k, int n_terms,
                        int* terms_used = nullptr);

// b_n coefficient of ln_kappa(1+x) = sum_n b_n (-1)^(n-1) x^n / n:
// b_1 = 1, b_n = (prod_{j<n}(1 - kappa/j) + prod_{j<n}(1 + kappa/j))/2.
double ln_kappa_taylor_coefficient(int n, const KappaParam& k);

// Partial sum of the series above, convergent for -1 < x <= 1.
double ln_kappa_taylor(double x, const KappaParam& k, int n_terms,
                       int* terms_used = nullptr);

// c_n coefficient of the factored form
// exp_kappa(x) = prod_n exp(c_n kappa^(2n) x^(2n+1));
// c_0 = 1, c_1 = -1/6, c_{n+1} = -c_n (2n+1)^2 / (2(n+1)(2n+3)).
double product_expansion_coefficient(int n);

// Product of the first n_factors + 1 factors, valid for kappa^2 x^2 <= 1.
double exp_kappa_product_expansion(double x, const KappaParam& k, int n_factors);

// Deformed Gamma function,
//   |2k|^(2-x) Gamma(w+1) Gamma(x) / Gamma(c + (x-1)/2),
// with c = 1/(2|k|) and w = c - (x-1)/2. Interpolates the deformed
// factorial: gamma_kappa(n+1) = n!_kappa. Poles where Gamma(x) or
// Gamma(w+1) blow up raise PoleError; zeros of 1/Gamma(c+(x-1)/2)
// return 0. Stable uniformly in kappa down to 0.
double gamma_kappa(double x, const KappaParam& k);

// Deformed Mellin value M(r) = integral of t^(r-1) exp_kappa(-t) over
// [0, inf), in closed form. Domain 0 < r < 1/|kappa|; equals Gamma(r)
// at kappa = 0.
double mellin_kappa(double r, const KappaParam& k);

// Truncated counterpart M(r, x) = integral over [0, x]. Closed form via
// two incomplete Beta terms with argument (sqrt(1+kappa^2 x^2)-|kappa| x)^2;
// direct quadrature of the defining integral below |kappa| = 5e-4 where
// the Beta route degenerates.
double mellin_kappa_incomplete(double r, double x, const KappaParam& k,
                               const QuadratureSpec& spec = {});

// B(x; s, r) = integral of y^(s-1) (1-y)^(r-1) over [0, x], 0 <= x <= 1,
// by adaptive quadrature with endpoint substitutions y = z^(1/s) and
// 1-y = z^(1/r) whenever the corresponding exponent lies in (-1, 0).
double incomplete_beta(double x, double s, double r,
                       const QuadratureSpec& spec = {});

enum class GammaTail { lower, upper };

// Lower/upper deformed incomplete Gamma for 1 < r < 1 + 1/|kappa|.
// lower(r, x) + upper(r, x) = gamma_kappa(r). The lower tail reuses the
// truncated Mellin closed form; the upper tail integrates the defining
// integrand over [x, inf).
double gamma_kappa_incomplete(double r, double x, const KappaParam& k,
                              GammaTail tail, const QuadratureSpec& spec = {});

// gamma_kappa(x) recovered from the logarithmic integral
// [1 - kappa^2 (x-1)^2] * integral of ln_kappa(1/t)^(x-1) over (0, 1),
// evaluated after t = exp(-u) so the integrand stays bounded.
double ln_kappa_gamma_integral(double x, const KappaParam& k,
                               const QuadratureSpec& spec = {});

// n!_kappa recovered from the two-integral ratio
// n * int ln_kappa(1/t)^n dt / int ln_kappa(t^-n) dt, for n < 1/|kappa|,
// both evaluated after t = exp(-u) so the integrands stay bounded.
double kappa_factorial_ratio_form(int n, const KappaParam& k,
                                  const QuadratureSpec& spec = {});

} // namespace kappa
