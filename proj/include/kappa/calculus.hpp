#pragma once

#include "kappa/deformation.hpp"
#include "kappa/quadrature.hpp"

namespace kappa {

// Jacobian dx/d{x} of the deformation: sqrt(1 + kappa^2 x^2) for the
// hyperbolic map, sqrt(1 - kappa^2 x^2) (|kappa x| <= 1) for the cyclic one.
double lorentz_factor(double x, const KappaParam& k,
                      DeformKind kind = DeformKind::hyperbolic);

// Derivative with respect to the deformed variable,
// lorentz_factor(x) * f'(x), with f' taken by centered difference at step
// h = eps^(1/3) max(1, |x|). Error is O(eps^(2/3)) relative.
double kappa_derivative(const Integrand& f, double x, const KappaParam& k,
                        DeformKind kind = DeformKind::hyperbolic);

// Same weight applied to a caller-supplied exact derivative value.
double kappa_derivative_exact(double fprime, double x, const KappaParam& k,
                              DeformKind kind = DeformKind::hyperbolic);

// Integral of f against the deformed measure dx / lorentz_factor(x), the
// inverse operation of kappa_derivative. b may be +inf (hyperbolic only).
double kappa_integral(const Integrand& f, double a, double b,
                      const KappaParam& k,
                      DeformKind kind = DeformKind::hyperbolic,
                      const QuadratureSpec& spec = {});

// Deformed kinetic energy x^2 / (1 + sqrt(1 + kappa^2 x^2)). Equal to
// (lorentz_factor - 1)/kappa^2 but free of the subtraction, so it stays
// fully accurate down to kappa = 0 where it becomes x^2/2.
double kinetic_energy(double x, const KappaParam& k);

} // namespace kappa
