#include "doctest.h"
#include "oracles.hpp"

#include "kappa/bessel.hpp"
#include "kappa/errors.hpp"

#include <cmath>

using namespace kappa;

TEST_CASE("bessel J reference values across both evaluation regimes") {
    // Series regime (|u| <= 14).
    CHECK(bessel_j(0, 0.7) == doctest::Approx(oracle::j0_07).epsilon(1e-13));
    CHECK(bessel_j(1, 3.3) == doctest::Approx(oracle::j1_33).epsilon(1e-13));
    CHECK(bessel_j(2, 1.5) == doctest::Approx(oracle::j2_15).epsilon(1e-13));
    CHECK(bessel_j(6, 2.1) == doctest::Approx(oracle::j6_21).epsilon(1e-12));
    CHECK(bessel_j(4, 13.9) == doctest::Approx(oracle::j4_139).epsilon(1e-11));
    // Asymptotic regime.
    CHECK(std::fabs(bessel_j(0, 25.1) - oracle::j0_251) < 2e-10);
    CHECK(std::fabs(bessel_j(2, 14.2) - oracle::j2_142) < 2e-10);
    CHECK(std::fabs(bessel_j(3, 7.3) - oracle::j3_73) < 2e-10);
    CHECK(std::fabs(bessel_j(3, 60.25) - oracle::j3_6025) < 2e-10);
    CHECK(std::fabs(bessel_j(5, 40.0) - oracle::j5_40) < 2e-10);
}

TEST_CASE("bessel J basic structure") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    // J_m(-u) = (-1)^m J_m(u).
    CHECK(bessel_j(1, -3.3) == doctest::Approx(-bessel_j(1, 3.3)));
    CHECK(bessel_j(2, -1.5) == doctest::Approx(bessel_j(2, 1.5)));
    CHECK_THROWS_AS(bessel_j(13, 1.0), InputError);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), InputError);
}

TEST_CASE("zero estimates bracket actual sign changes") {
    for (int m : {0, 1, 2, 5}) {
        for (int n : {1, 2, 3, 8}) {
            const double z = bessel_j_zero(m, n);
            CHECK(z > 0.0);
            // McMahon is O(1/n): the function must change sign within 0.5
            // of the estimate.
            CHECK(bessel_j(m, z - 0.5) * bessel_j(m, z + 0.5) < 0.0);
        }
    }
    CHECK(bessel_j_zero(0, 2) > bessel_j_zero(0, 1));
}
