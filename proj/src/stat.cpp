#include "kappa/stat.hpp"

#include "kappa/errors.hpp"
#include "kappa/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace kappa {

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty())
        throw InputError("DiscreteDistribution: needs at least one state");
    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w))
            throw InputError("DiscreteDistribution: weights must be finite");
        if (w < 0.0)
            throw DomainError("DiscreteDistribution: weights must be >= 0");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw InputError("DiscreteDistribution: weights sum to " +
                         std::to_string(total) + ", expected 1");
}

double kappa_entropy(const DiscreteDistribution& y, const KappaParam& k) {
    double s = 0.0;
    for (double p : y.weights()) {
        if (p == 0.0)
            continue;
        s -= p * ln_kappa(p, k);
    }
    return s;
}

double kappa_entropy(const Integrand& y, double a, double b,
                     const KappaParam& k, const QuadratureSpec& spec) {
    if (!y)
        throw InputError("kappa_entropy: needs a density");
    if (std::isnan(a) || std::isnan(b))
        throw InputError("kappa_entropy: NaN bound");
    const auto g = [&](double x) {
        const double yx = y(x);
        if (std::isnan(yx) || yx < 0.0)
            throw DomainError("kappa_entropy: density is negative or NaN at x = " +
                              std::to_string(x));
        if (yx == 0.0)
            return 0.0;
        return -yx * ln_kappa(yx, k);
    };
    if (b == std::numeric_limits<double>::infinity())
        return integrate_tail(g, a, k, spec).value;
    return integrate(g, a, b, spec).value;
}

double maxent_distribution(const Integrand& g, double x, const KappaParam& k) {
    if (!g)
        throw InputError("maxent_distribution: needs a source term");
    const DeformationConstants c = deformation_constants(k);
    return exp_kappa(c.gamma * g(x), k) / c.epsilon;
}

double maxent_stationarity_residual(const Integrand& g, double x,
                                    const KappaParam& k) {
    const double y = maxent_distribution(g, x, k);
    const auto phi = [&](double u) { return u * ln_kappa(u, k); };
    double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
               std::max(1.0, y);
    h = std::min(h, 0.5 * y);
    // Snap the step so (up - dn) is exactly representable.
    volatile const double up = y + h;
    volatile const double dn = y - h;
    const double width = up - dn;
    const double slope = (phi(up) - phi(dn)) / width;
    return std::fabs(slope - g(x));
}

double kappa_statistical_weight(double energy, const StatParams& p) {
    if (std::isnan(energy))
        throw InputError("kappa_statistical_weight: NaN energy");
    if (!(p.beta > 0.0))
        throw DomainError("kappa_statistical_weight: beta must be positive");
    return exp_kappa(p.beta * (p.mu - energy), p.kappa);
}

double tail_exponent_fit(const std::vector<double>& energy,
                         const std::vector<double>& density) {
    if (energy.size() != density.size())
        throw InputError("tail_exponent_fit: sequences differ in length");
    const std::size_t n = energy.size();
    if (n < 10)
        throw FitError("tail_exponent_fit: needs at least 10 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(energy[i]) || !(energy[i] > 0.0))
            throw DomainError("tail_exponent_fit: energies must be positive");
        if (i > 0 && !(energy[i] > energy[i - 1]))
            throw InputError("tail_exponent_fit: energies must be ascending");
    }
    if (!(energy.back() >= 10.0 * energy.front()))
        throw FitError("tail_exponent_fit: grid spans less than one decade");
    const double cut = energy.back() / 10.0;
    std::vector<double> u, v;
    for (std::size_t i = 0; i < n; ++i) {
        if (energy[i] < cut)
            continue;
        if (!std::isfinite(density[i]) || !(density[i] > 0.0))
            throw FitError("tail_exponent_fit: top decade holds non-positive "
                           "density; not power-law data");
        u.push_back(std::log(energy[i]));
        v.push_back(std::log(density[i]));
    }
    if (u.size() < 3)
        throw FitError("tail_exponent_fit: too few points in the top decade");
    double um = 0.0, vm = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        um += u[i];
        vm += v[i];
    }
    um /= static_cast<double>(u.size());
    vm /= static_cast<double>(u.size());
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cov += (u[i] - um) * (v[i] - vm);
        var += (u[i] - um) * (u[i] - um);
    }
    if (!(var > 0.0))
        throw FitError("tail_exponent_fit: degenerate abscissae");
    return cov / var;
}

} // namespace kappa
