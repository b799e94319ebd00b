#include "doctest.h"
#include "oracles.hpp"

#include "kappa/errors.hpp"
#include "kappa/functions.hpp"
#include "kappa/laplace.hpp"

#include <cmath>

using namespace kappa;

TEST_CASE("table closed forms at frozen reference points") {
    const KappaParam k(0.3);
    CHECK(laplace_table(TableKind::heaviside, 1.0, k).F(2.0) ==
          doctest::Approx(oracle::laplace_step1_s2_k03).epsilon(1e-13));
    CHECK(laplace_table(TableKind::monomial, 1.0, k).F(2.0) ==
          doctest::Approx(oracle::laplace_t_s2_k03).epsilon(1e-13));
    CHECK(laplace_table(TableKind::monomial, 2.0, k).F(2.0) ==
          doctest::Approx(oracle::laplace_t2_s2_k03).epsilon(1e-13));
    CHECK(laplace_table(TableKind::monomial, 3.0, k).F(2.0) ==
          doctest::Approx(oracle::laplace_t3_s2_k03).epsilon(1e-13));
    CHECK(laplace_table(TableKind::power, 2.5, KappaParam(0.4)).F(3.0) ==
          doctest::Approx(oracle::laplace_power25_s3_k04).epsilon(1e-11));
    // Unit constant: s / (s^2 - kappa^2).
    CHECK(laplace_table(TableKind::heaviside, 0.0, KappaParam(0.5)).F(1.0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("table rows agree with direct quadrature") {
    const KappaParam k(0.3);
    for (TableKind kind : {TableKind::heaviside, TableKind::monomial}) {
        const TableEntry row = laplace_table(kind, 1.0, k);
        const double want = row.F(2.0);
        const double got = laplace_kappa(row.f, 2.0, k, row.growth_bound);
        CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }

    // At kappa = 0.1 the step at t = 1 maps to theta = 0.99834, inside
    // the node-free margin of the first tail block; the breakpoint keeps
    // the jump on a segment edge.
    const KappaParam ks(0.1);
    const TableEntry step = laplace_table(TableKind::heaviside, 1.0, ks);
    QuadratureSpec spec;
    spec.breakpoints = {1.0};
    for (double s : {1.5, 4.0})
        CHECK(laplace_kappa(step.f, s, ks, step.growth_bound, spec) ==
              doctest::Approx(step.F(s)).epsilon(1e-9));
}

TEST_CASE("growth bounds are enforced") {
    const KappaParam k(0.4);
    const TableEntry row = laplace_table(TableKind::monomial, 2.0, k);
    // Even monomial bound: s must clear (2m - 1) kappa... here the table
    // publishes the bound; at or below it the closed form refuses.
    CHECK_THROWS_AS(row.F(row.growth_bound), DomainError);
    CHECK_THROWS_AS(laplace_table(TableKind::power, 2.0, KappaParam(0.5)).F(0.4),
                    DomainError);
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(laplace_kappa(one, 0.3, k, 0.4), DomainError);
    CHECK_THROWS_AS(laplace_table(TableKind::power, -1.0, k), DomainError);
    CHECK_THROWS_AS(laplace_table(TableKind::monomial, 2.5, k), DomainError);
}

TEST_CASE("deformed convolution") {
    const KappaParam k(0.3);
    const auto one = [](double) { return 1.0; };
    CHECK(kappa_convolution(one, one, 1.0, k) ==
          doctest::Approx(oracle::convolution_1_1_t1_k03).epsilon(1e-10));
    CHECK(kappa_convolution(one, one, 0.0, k) == 0.0);
    // Commutativity for asymmetric arguments.
    const auto ramp = [](double t) { return t; };
    CHECK(kappa_convolution(one, ramp, 0.8, k) ==
          doctest::Approx(kappa_convolution(ramp, one, 0.8, k))
              .epsilon(1e-10));
}

TEST_CASE("convolution theorem") {
    const KappaParam k(0.3);
    const TableEntry u = laplace_table(TableKind::heaviside, 0.0, k);
    const TableEntry t1 = laplace_table(TableKind::monomial, 1.0, k);
    const double s = 2.0;
    const auto conv = [&](double t) {
        return kappa_convolution(u.f, t1.f, t, k);
    };
    const double lhs = laplace_kappa(conv, s, k, u.growth_bound + t1.growth_bound);
    CHECK(lhs == doctest::Approx(u.F(s) * t1.F(s)).epsilon(1e-6));
}

TEST_CASE("property rows") {
    const KappaParam k(0.3);
    LaplacePropertyInput in;
    in.f = [](double t) { return t; };
    in.s = 2.0;
    in.a = 3.0;
    in.b = -0.5;
    in.g = [](double t) { return std::exp(-t); };
    PropertyCheck c = laplace_property_check(LaplaceProperty::linearity, in, k,
                                             1e-8);
    CHECK(c.pass);
    CHECK(c.residual < 1e-8);

    in = LaplacePropertyInput{};
    in.f = [](double) { return 1.0; };
    in.s = 3.0;
    in.a = 2.0;
    c = laplace_property_check(LaplaceProperty::scaling, in, KappaParam(0.4),
                               1e-7);
    CHECK(c.pass);

    in = LaplacePropertyInput{};
    in.f = [](double t) { return t; };
    in.df = [](double) { return 1.0; };
    in.s = 2.0;
    c = laplace_property_check(LaplaceProperty::derivative, in, k, 1e-6);
    CHECK(c.pass);

    in = LaplacePropertyInput{};
    in.f = [](double t) { return t; };
    in.integral_f = [](double t) { return 0.5 * t * t; };
    in.s = 2.0;
    c = laplace_property_check(LaplaceProperty::weighted_integral, in, k, 1e-6);
    CHECK(c.pass);

    in = LaplacePropertyInput{};
    in.f = [](double t) { return t; };
    in.F = laplace_table(TableKind::monomial, 1.0, k).F;
    in.s = 2.0;
    c = laplace_property_check(LaplaceProperty::division, in, k, 1e-6);
    CHECK(c.pass);
}

TEST_CASE("limit value theorems") {
    const KappaParam k(0.4);
    const auto coshed = [&](double t) {
        return 0.5 * (exp_kappa(t, k) + exp_kappa(-t, k));
    };
    CHECK(limit_value_theorem(coshed, LimitKind::initial, k, 1.0 + 0.4) ==
          doctest::Approx(1.0).epsilon(1e-4));
    // f = [exp_kappa(-t)]^kappa has t f(t) -> 1/(2 kappa): the final
    // value comes out exactly 1/2 for every kappa.
    const auto decay = [&](double t) {
        return std::pow(exp_kappa(-t, k), k.value());
    };
    CHECK(limit_value_theorem(decay, LimitKind::final, k, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("bessel integral representation of the kernel") {
    CHECK(bessel_kernel_check(0.0, 2) < 1e-4);
    CHECK(bessel_kernel_check(1.0, 2) < 1e-4);
    CHECK(bessel_kernel_check(2.0, 3) < 1e-4);
}

TEST_CASE("inverse transform round trip") {
    const KappaParam k(0.3);
    const auto Fc = laplace_table_complex(TableKind::monomial, 1.0, k);
    for (double t : {0.5, 1.0, 2.0})
        CHECK(inverse_laplace_kappa(Fc, t, k, 1.1) ==
              doctest::Approx(t).epsilon(1e-3));
    CHECK_THROWS_AS(laplace_table_complex(TableKind::power, 1.5, k),
                    InputError);
}

TEST_CASE("laplace classical limit") {
    const KappaParam k(1e-10);
    const auto one = [](double) { return 1.0; };
    CHECK(laplace_kappa(one, 2.0, k, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-7));
    CHECK(laplace_table(TableKind::dirac, 1.0, k).F(2.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-7));
}
