#pragma once

#include "kappa/deformation.hpp"
#include "kappa/quadrature.hpp"

#include <cstddef>
#include <vector>

namespace kappa {

// Probability vector on a finite state space: nonnegative finite weights
// summing to 1 within 1e-12.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> weights);

    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

private:
    std::vector<double> weights_;
};

// Inverse temperature, chemical potential, and deformation of the
// statistical weight exp_kappa(-beta E + beta mu).
struct StatParams {
    double beta;
    double mu;
    KappaParam kappa;
};

// Discrete deformed entropy: sum over states of
// (p^(1-kappa) - p^(1+kappa)) / (2 kappa), i.e. -p ln_kappa(p).
// Zero-weight states contribute exactly zero.
double kappa_entropy(const DiscreteDistribution& y, const KappaParam& k);

// Continuous form: integral over [a, b] of -y ln_kappa(y). The density must
// be nonnegative on the domain; b may be +infinity.
double kappa_entropy(const Integrand& y, double a, double b,
                     const KappaParam& k, const QuadratureSpec& spec = {});

// Stationary point of the entropy functional with source g:
// y(x) = (1/epsilon) exp_kappa(gamma g(x)) with the deformation constants
// gamma, epsilon. At kappa = 0 this is the classical exp(g(x) - 1).
double maxent_distribution(const Integrand& g, double x, const KappaParam& k);

// Centered-difference residual |d/dy (y ln_kappa y) - g(x)| evaluated at
// y = maxent_distribution(g, x, k). Zero (to FD accuracy) iff the
// distribution solves the variational problem.
double maxent_stationarity_residual(const Integrand& g, double x,
                                    const KappaParam& k);

// exp_kappa(-beta E + beta mu): Boltzmann-like at low energy, power-law
// E^(-1/kappa) at high energy.
double kappa_statistical_weight(double energy, const StatParams& p);

// Least-squares slope of log density vs log energy over the top decade of
// the grid. For data from kappa_statistical_weight the slope approaches
// -1/kappa.
double tail_exponent_fit(const std::vector<double>& energy,
                         const std::vector<double>& density);

} // namespace kappa
