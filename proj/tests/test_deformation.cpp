#include "doctest.h"
#include "oracles.hpp"

#include "kappa/deformation.hpp"
#include "kappa/errors.hpp"

#include <cmath>

using namespace kappa;

TEST_CASE("kappa parameter validation") {
    CHECK_THROWS_AS(KappaParam(1.0), DomainError);
    CHECK_THROWS_AS(KappaParam(-1.3), DomainError);
    CHECK_THROWS_AS(KappaParam(std::nan("")), InputError);
    CHECK_NOTHROW(KappaParam(0.999));
    CHECK_NOTHROW(KappaParam(2.0, false));
    CHECK(KappaParam(0.0).is_zero());
    // Every formula is even in kappa, so the sign is dropped up front.
    CHECK(KappaParam(-0.4).value() == 0.4);
}

TEST_CASE("deformation map round trip and oracle values") {
    const KappaParam k(0.5);
    CHECK(deform_map(1.0, k) == doctest::Approx(oracle::deform_map_1_k05).epsilon(1e-15));
    CHECK(deform_inv(1.0, k) == doctest::Approx(oracle::deform_inv_1_k05).epsilon(1e-15));
    for (double x : {-7.3, -0.2, 0.0, 0.4, 12.0}) {
        CHECK(deform_inv(deform_map(x, k), k) == doctest::Approx(x).epsilon(1e-14));
        CHECK(deform_map(-x, k) == doctest::Approx(-deform_map(x, k)));
    }
    CHECK(deform_map(0.0, k) == 0.0);
    // Identity map at kappa = 0.
    const KappaParam zero(0.0);
    CHECK(deform_map(3.7, zero) == 3.7);
    CHECK(deform_inv(-2.1, zero) == -2.1);
}

TEST_CASE("cyclic map domain") {
    const KappaParam k(0.5);
    CHECK(deform_map(1.0, k, DeformKind::cyclic) ==
          doctest::Approx(std::asin(0.5) / 0.5).epsilon(1e-15));
    CHECK_THROWS_AS(deform_map(2.1, k, DeformKind::cyclic), DomainError);
    CHECK_THROWS_AS(deform_map(-2.1, k, DeformKind::cyclic), DomainError);
    // The boundary point |kappa x| = 1 is inside the domain.
    CHECK(deform_map(2.0, k, DeformKind::cyclic) ==
          doctest::Approx(std::asin(1.0) / 0.5).epsilon(1e-15));
}

TEST_CASE("deformed sum oracle and group structure") {
    const KappaParam k(0.5);
    CHECK(kappa_sum(1.0, 1.0, k) ==
          doctest::Approx(oracle::kappa_sum_1_1_k05).epsilon(1e-15));
    CHECK(kappa_sum(2.0, 0.0, k) == 2.0);
    CHECK(kappa_sum(2.0, -2.0, k) == doctest::Approx(0.0));
    CHECK(kappa_diff(3.0, 3.0, k) == doctest::Approx(0.0));
    CHECK(kappa_diff(3.0, 1.0, k) ==
          doctest::Approx(kappa_sum(3.0, -1.0, k)).epsilon(1e-15));
}

TEST_CASE("deformed product, identity, inverse, division") {
    const KappaParam k(0.3);
    const double id = kappa_prod_identity(k);
    CHECK(id == doctest::Approx(std::sinh(0.3) / 0.3).epsilon(1e-15));
    for (double x : {0.2, 1.0, 4.5}) {
        CHECK(kappa_prod(x, id, k) == doctest::Approx(x).epsilon(1e-13));
        CHECK(kappa_prod(x, kappa_prod_inverse(x, k), k) ==
              doctest::Approx(id).epsilon(1e-13));
        CHECK(kappa_div(x, x, k) == doctest::Approx(id).epsilon(1e-13));
    }
    CHECK_THROWS_AS(kappa_prod_inverse(0.0, k), DomainError);
    // {x (x) y} = {x} {y}
    const double x = 1.7, y = 2.9;
    CHECK(deform_map(kappa_prod(x, y, k), k) ==
          doctest::Approx(deform_map(x, k) * deform_map(y, k)).epsilon(1e-14));
}

TEST_CASE("deformed product overflow guard") {
    const KappaParam k(0.9);
    // {x} ~ asinh(0.9 x)/0.9 grows slowly, but [{x}{y}] = sinh(0.9 {x}{y})/0.9
    // explodes once {x}{y} is a few hundred.
    CHECK_THROWS_AS(kappa_prod(1e150, 1e150, k), OverflowError);
}

TEST_CASE("n-fold sum matches iterated sums and handles negatives") {
    const KappaParam k(0.4);
    const double x = 0.8;
    double acc = x;
    for (int i = 1; i < 4; ++i)
        acc = kappa_sum(acc, x, k);
    CHECK(kappa_nfold_sum(4, x, k) == doctest::Approx(acc).epsilon(1e-14));
    CHECK(kappa_nfold_sum(0, x, k) == doctest::Approx(0.0));
    CHECK(kappa_nfold_sum(-3, x, k) ==
          doctest::Approx(-kappa_nfold_sum(3, x, k)).epsilon(1e-14));
}

TEST_CASE("classical limit of the algebra") {
    const KappaParam zero(0.0);
    CHECK(kappa_sum(1.3, 2.4, zero) == doctest::Approx(3.7).epsilon(1e-15));
    CHECK(kappa_prod(1.3, 2.0, zero) == doctest::Approx(2.6).epsilon(1e-15));
    CHECK(kappa_prod_identity(zero) == 1.0);
    CHECK(kappa_div(3.0, 2.0, zero) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("non-finite inputs are rejected") {
    const KappaParam k(0.5);
    CHECK_THROWS_AS(kappa_sum(std::nan(""), 1.0, k), InputError);
    CHECK_THROWS_AS(deform_map(std::nan(""), k), InputError);
}
