#pragma once

#include "kappa/deformation.hpp"
#include "kappa/quadrature.hpp"

#include <complex>
#include <functional>
#include <string>

namespace kappa {

// Transform in use throughout: F(s) = integral over [0, inf) of
// f(t) [exp_kappa(-t)]^s dt, where [exp_kappa(-t)]^s = exp(-s {t}).

// Closed-form table rows.
enum class TableKind {
    dirac,      // delta(t - tau);        param = tau >= 0
    heaviside,  // unit step at tau;      param = tau >= 0
    power,      // t^(nu - 1);            param = nu > 0
    monomial,   // t^p, integer p >= 0;   param = p
};

struct TableEntry {
    Integrand f;                      // time signal; empty for dirac
    std::function<double(double)> F;  // closed-form transform of s
    double growth_bound;              // F defined for s > growth_bound
    std::string label;
};

// Builds a table row. Each F validates its own s-domain and throws
// DomainError at or below the growth bound. The power row evaluates two
// independent closed forms, the Gamma-ratio form and the gamma_kappa
// form at deformation kappa/s, and requires agreement to 1e-11.
TableEntry laplace_table(TableKind kind, double param, const KappaParam& k);

// Complex-s closed form for the rows that stay elementary in s (dirac,
// heaviside, monomial); used by the inverse transform round trips.
// The power row has no elementary complex extension here: InputError.
std::function<std::complex<double>(std::complex<double>)>
laplace_table_complex(TableKind kind, double param, const KappaParam& k);

// Numerical transform of an arbitrary signal. growth_bound is the
// caller's convergence contract: the integral is only attempted for
// s > growth_bound, since quadrature cannot tell slow divergence from
// slow convergence on power-law tails.
double laplace_kappa(const Integrand& f, double s, const KappaParam& k,
                     double growth_bound = 0.0, const QuadratureSpec& spec = {});

// Deformed convolution
//   (f conv g)(t) = integral over [0, t] of f(t kdiff tau) g(tau)
//                   lorentz_factor(t kdiff tau) / lorentz_factor(t) dtau.
// Its transform is the product F(s) G(s); the weight is what makes that
// exact, and it also makes the operation commutative.
double kappa_convolution(const Integrand& f, const Integrand& g, double t,
                         const KappaParam& k, const QuadratureSpec& spec = {});

// Transform property rows.
enum class LaplaceProperty {
    linearity,            // a f + b g               <->  a F + b G
    scaling,              // f(a t)                  <->  (1/a) F_{kappa/a}(s/a)
    modulation,           // f [exp_kappa(t)]^a      <->  F(s - a)
    derivative,           // f'                      <->  s L{f/gamma}(s) - f(0)
    weighted_derivative,  // (gamma f)'              <->  s F(s) - f(0)
    weighted_integral,    // (1/gamma) int_0^t f     <->  F(s)/s
    multiplication,       // f {t}^n                 <->  (-1)^n F^(n)(s)
    division,             // f / {t}                 <->  int_s^inf F(w) dw
};

struct LaplacePropertyInput {
    Integrand f;                      // primary signal
    double f_bound = 0.0;             // growth bound of f
    Integrand g;                      // second signal (linearity only)
    double g_bound = 0.0;
    Integrand df;                     // analytic f' (derivative rows)
    Integrand integral_f;             // analytic primitive (integral row)
    std::function<double(double)> F;  // analytic transform, optional;
                                      // used by multiplication/division
    double s = 1.0;                   // evaluation point
    double a = 1.0;                   // row coefficient
    double b = 1.0;                   // second coefficient (linearity)
    int n = 1;                        // derivative order (multiplication: 1 or 2)
};

struct PropertyCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs| / max(1, |lhs|, |rhs|)
    bool pass = false;
};

// Evaluates both sides of the selected property row numerically.
// Preconditions: scaling requires a >= 2 kappa (the deformation kappa/a
// must stay physical); modulation requires s - a above the growth bound;
// division requires f(t)/{t} integrable at zero, which means f(0) = 0.
PropertyCheck laplace_property_check(LaplaceProperty prop,
                                     const LaplacePropertyInput& in,
                                     const KappaParam& k, double tolerance,
                                     const QuadratureSpec& spec = {});

enum class LimitKind { initial, final };

// Initial/final value theorems: lim_{s->inf} s F(s) = f(0+) and
// lim_{s->0} s F(s) = |kappa| lim_{t->inf} t f(t). The limit is taken by
// Neville extrapolation of s F(s) over a geometric s-ladder (ratio 2,
// 6 rungs; initial starts at s = 4 going up, final at s = 0.5 going
// down). ConvergenceError when the ladder does not settle.
double limit_value_theorem(const Integrand& f, LimitKind kind,
                           const KappaParam& k, double growth_bound = 0.0,
                           const QuadratureSpec& spec = {});

// Scaled residual between exp_kappa(-s) at kappa = 1/m and its Bessel
// integral representation m * int_0^inf (J_m(u)/u) exp(-s u/m) du,
// the latter summed over sign-coherent blocks cut at the zeros of J_m.
double bessel_kernel_check(double s, int m, const QuadratureSpec& spec = {});

// Inverse transform along the vertical contour Re s = contour_abscissa,
// reduced to the real cosine integral
//   f(t) = (2 e^(c theta) / (pi gamma(t))) *
//          int_0^inf Re F(c + i w) cos(w theta) dw,   theta = {t},
// summed over half-period blocks with alternating-series acceleration.
// Requires t > 0 and a contour to the right of all singularities of F.
double inverse_laplace_kappa(
    const std::function<std::complex<double>(std::complex<double>)>& F,
    double t, const KappaParam& k, double contour_abscissa,
    const QuadratureSpec& spec = {});

} // namespace kappa
