#include "doctest.h"
#include "oracles.hpp"

#include "kappa/errors.hpp"
#include "kappa/functions.hpp"
#include "kappa/stat.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace kappa;

TEST_CASE("discrete distribution validation") {
    CHECK_THROWS_AS(DiscreteDistribution({}), InputError);
    CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.4}), InputError);
    CHECK_THROWS_AS(DiscreteDistribution({1.5, -0.5}), DomainError);
    CHECK_THROWS_AS(DiscreteDistribution({std::nan(""), 1.0}), InputError);
    CHECK_NOTHROW(DiscreteDistribution({0.25, 0.25, 0.5}));
}

TEST_CASE("discrete entropy closed values") {
    // Uniform on n states: S = ln_kappa(n); n = 4, kappa = 1/2 gives 3/2.
    const DiscreteDistribution uniform4(
        std::vector<double>(4, 0.25));
    CHECK(kappa_entropy(uniform4, KappaParam(0.5)) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(kappa_entropy(uniform4, KappaParam(0.0)) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-14));
    // A point mass carries no entropy; zero weights contribute exactly 0.
    CHECK(kappa_entropy(DiscreteDistribution({0.0, 1.0, 0.0}),
                        KappaParam(0.3)) == 0.0);
}

TEST_CASE("continuous entropy") {
    const KappaParam k(0.4);
    // Uniform density 1/4 on [0, 4]: S = ln_kappa(4).
    const auto y = [](double) { return 0.25; };
    CHECK(kappa_entropy(y, 0.0, 4.0, k) ==
          doctest::Approx(ln_kappa(4.0, k)).epsilon(1e-10));
    // Half-line density exp(-x): finite deformed entropy, near the
    // Shannon value 1 for small kappa.
    const auto e = [](double x) { return std::exp(-x); };
    CHECK(kappa_entropy(e, 0.0, std::numeric_limits<double>::infinity(),
                        KappaParam(1e-6)) == doctest::Approx(1.0).epsilon(1e-9));
    const auto bad = [](double x) { return 0.5 - x; };
    CHECK_THROWS_AS(kappa_entropy(bad, 0.0, 1.0, k), DomainError);
}

TEST_CASE("maxent distribution") {
    // Source g = 0: y = 1/epsilon, and epsilon is exactly 3 at kappa = 1/2
    // (it is ((1+k)/(1-k))^(1/2k)), e at kappa = 0.
    const auto zero = [](double) { return 0.0; };
    CHECK(maxent_distribution(zero, 0.7, KappaParam(0.5)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(maxent_distribution(zero, 0.7, KappaParam(0.0)) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    const auto g = [](double x) { return -0.5 * x * x; };
    for (double x : {0.0, 0.8, 2.0})
        CHECK(maxent_stationarity_residual(g, x, KappaParam(0.3)) < 1e-6);
}

TEST_CASE("statistical weight") {
    StatParams p{2.0, 1.5, KappaParam(0.4)};
    CHECK(kappa_statistical_weight(1.5, p) == 1.0);
    // Boltzmann limit at kappa = 0.
    StatParams cl{2.0, 0.0, KappaParam(0.0)};
    CHECK(kappa_statistical_weight(3.0, cl) ==
          doctest::Approx(std::exp(-6.0)).epsilon(1e-12));
    // Power tail: E^(-1/kappa) scaling over two decades.
    StatParams tail{1.0, 0.0, KappaParam(0.5)};
    const double r = kappa_statistical_weight(1e6, tail) /
                     kappa_statistical_weight(1e4, tail);
    CHECK(r == doctest::Approx(1e-4).epsilon(1e-3));
    StatParams bad{-1.0, 0.0, KappaParam(0.4)};
    CHECK_THROWS_AS(kappa_statistical_weight(1.0, bad), DomainError);
}

TEST_CASE("tail exponent fit") {
    const StatParams p{1.0, 0.0, KappaParam(0.25)};
    std::vector<double> energy, density;
    for (int i = 0; i < 25; ++i) {
        const double e = 100.0 * std::pow(10.0, i / 12.0);
        energy.push_back(e);
        density.push_back(kappa_statistical_weight(e, p));
    }
    CHECK(tail_exponent_fit(energy, density) ==
          doctest::Approx(-4.0).epsilon(0.02));

    std::vector<double> short_e(energy.begin(), energy.begin() + 5);
    std::vector<double> short_d(density.begin(), density.begin() + 5);
    CHECK_THROWS_AS(tail_exponent_fit(short_e, short_d), FitError);

    std::vector<double> narrow_e, narrow_d;
    for (int i = 0; i < 12; ++i) {
        narrow_e.push_back(100.0 + i);
        narrow_d.push_back(1.0 / (100.0 + i));
    }
    CHECK_THROWS_AS(tail_exponent_fit(narrow_e, narrow_d), FitError);

    std::vector<double> mismatched(energy.begin(), energy.begin() + 20);
    CHECK_THROWS_AS(tail_exponent_fit(mismatched, density), InputError);
}
