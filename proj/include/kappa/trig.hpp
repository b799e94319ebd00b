#pragma once

#include "kappa/deformation.hpp"

namespace kappa {

enum class TrigFn { sinh, cosh, tanh, coth, sin, cos, tan, cot };
enum class InvTrigFn { asinh, acosh, atanh, acoth, asin, acos, atan, acot };

// Deformed circular/hyperbolic functions by composition with the
// deformation angle: sinh_kappa(x) = sinh({x}) and so on. The four
// hyperbolic entries use the hyperbolic angle; the four cyclic ones use
// the cyclic angle and require |kappa*x| <= 1. tan/cot/coth raise
// PoleError when the angle sits within a few ulps of a pole.
double trig_kappa(TrigFn fn, double x, const KappaParam& k);

// Classical inverse composed with the inverse deformation,
// asinh_kappa(x) = [asinh(x)] and so on. Round trips with trig_kappa hold
// wherever the composed angle stays on the principal branch; acot uses
// the (0, pi) convention.
double inv_trig_kappa(InvTrigFn fn, double x, const KappaParam& k);

double sinh_kappa(double x, const KappaParam& k);
double cosh_kappa(double x, const KappaParam& k);
double tanh_kappa(double x, const KappaParam& k);
double coth_kappa(double x, const KappaParam& k);
double sin_kappa(double x, const KappaParam& k);
double cos_kappa(double x, const KappaParam& k);
double tan_kappa(double x, const KappaParam& k);
double cot_kappa(double x, const KappaParam& k);

double asinh_kappa(double x, const KappaParam& k);
double acosh_kappa(double x, const KappaParam& k);
double atanh_kappa(double x, const KappaParam& k);
double acoth_kappa(double x, const KappaParam& k);
double asin_kappa(double x, const KappaParam& k);
double acos_kappa(double x, const KappaParam& k);
double atan_kappa(double x, const KappaParam& k);
double acot_kappa(double x, const KappaParam& k);

// Common value of (cosh_kappa(x) + sinh_kappa(x))^r and of
// cosh_{kappa/r}(r x) + sinh_{kappa/r}(r x). Both routes are evaluated
// independently and must agree to 1e-11 in scaled residual; disagreement
// raises Error. r must be nonzero.
double de_moivre_kappa(double x, double r, const KappaParam& k);

} // namespace kappa
