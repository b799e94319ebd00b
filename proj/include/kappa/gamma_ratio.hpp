#pragma once

namespace kappa::detail {

// log |Gamma(x)| together with the sign of Gamma(x).
struct SignedLog {
    double log_abs;
    double sign;
};

// sin(pi*x) with argument reduction done on x, exact at integers.
double sin_pi(double x);

// True when x sits within a few ulps of a nonpositive integer.
bool near_nonpositive_integer(double x);

// Signed log-gamma; reflection formula for x < 0. Throws PoleError at
// nonpositive integers.
SignedLog slgamma(double x);

// log(Gamma(c-d)/Gamma(c+d)) + 2*d*log(c) for c - d > 0. The leading
// -2*d*log(c) part of the ratio is removed analytically, so the value
// stays accurate for c as large as 1/epsilon where the plain lgamma
// difference loses every digit. Series form requires |d| <= c/4; the
// caller falls back to slgamma differences outside that range.
double lgamma_ratio_excess(double c, double d);

// log(Gamma(c-d)/Gamma(c+d)) choosing between the stable excess form
// (large c) and direct signed log-gamma differences.
SignedLog lgamma_ratio(double c, double d);

} // namespace kappa::detail
