#include "kappa/bessel.hpp"

#include "kappa/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kappa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 14.0;

void require_order(int m, const char* who) {
    if (m < 0 || m > 12)
        throw InputError(std::string(who) + ": order must be in [0, 12], got " +
                         std::to_string(m));
}

double series_j(int m, double u) {
    const double half = 0.5 * u;
    double term = 1.0;
    for (int j = 1; j <= m; ++j)
        term *= half / j;
    double sum = term;
    const double h2 = half * half;
    // Factorial decay makes the ratio < 1 from j ~ u/2 on; 200 terms is
    // far past the last contributing one for u <= 14.
    for (int j = 1; j <= 200; ++j) {
        term *= -h2 / (static_cast<double>(j) * (m + j));
        sum += term;
        if (std::fabs(term) <= kEps * std::fabs(sum))
            break;
    }
    return sum;
}

double hankel_j(int m, double u) {
    const double mu = 4.0 * static_cast<double>(m) * m;
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 60; ++j) {
        const double odd = 2.0 * j - 1.0;
        a *= (mu - odd * odd) / (8.0 * j * u);
        // Asymptotic series: stop at the smallest term.
        if (std::fabs(a) >= prev)
            break;
        prev = std::fabs(a);
        switch (j % 4) {
        case 1: q += a; break;
        case 2: p -= a; break;
        case 3: q -= a; break;
        case 0: p += a; break;
        }
        if (std::fabs(a) < 1e-18)
            break;
    }
    const double chi = u - (0.5 * m + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * u)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j(int m, double u) {
    require_order(m, "bessel_j");
    if (std::isnan(u))
        throw InputError("bessel_j: NaN input");
    double sign = 1.0;
    if (u < 0.0) {
        u = -u;
        if (m % 2 != 0)
            sign = -1.0;
    }
    return sign * (u <= kSeriesLimit ? series_j(m, u) : hankel_j(m, u));
}

double bessel_j_zero(int m, int n) {
    require_order(m, "bessel_j_zero");
    if (n < 1)
        throw InputError("bessel_j_zero: zeros are indexed from 1");
    const double beta = (n + 0.5 * m - 0.25) * kPi;
    const double mu = 4.0 * static_cast<double>(m) * m;
    return beta - (mu - 1.0) / (8.0 * beta);
}

} // namespace kappa
