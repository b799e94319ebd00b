#pragma once

#include "kappa/errors.hpp"

namespace kappa {

// Deformation parameter. Negative values are canonicalized to |kappa| at
// construction; every formula in the library is even in kappa. A physical
// parameter satisfies |kappa| < 1, which keeps the relativistic constants
// (Lorentz factor, deformed Napier number) finite. Pass physical = false
// for formal use such as reciprocal parameters larger than one.
class KappaParam {
public:
    explicit KappaParam(double kappa, bool physical = true);

    double value() const { return kappa_; }
    bool physical() const { return physical_; }
    bool is_zero() const { return kappa_ == 0.0; }

private:
    double kappa_;
    bool physical_;
};

// Selects between the hyperbolic deformation (arcsinh/sinh generators,
// defined on the whole real line) and the cyclic one (arcsin/sin
// generators, defined for |x| <= 1/|kappa|).
enum class DeformKind { hyperbolic, cyclic };

// {x}: the map that turns kappa-arithmetic into ordinary arithmetic.
// Hyperbolic: arcsinh(kappa*x)/kappa. Cyclic: arcsin(kappa*x)/kappa.
// Odd, exact at x = 0, and the identity map at kappa = 0.
double deform_map(double x, const KappaParam& k, DeformKind kind = DeformKind::hyperbolic);

// [x]: inverse of deform_map. Hyperbolic: sinh(kappa*x)/kappa.
double deform_inv(double x, const KappaParam& k, DeformKind kind = DeformKind::hyperbolic);

// x (+) y = x*sqrt(1 + kappa^2 y^2) + y*sqrt(1 + kappa^2 x^2) in the
// hyperbolic family; the cyclic form carries sqrt(1 - kappa^2 y^2) factors.
// Satisfies {x (+) y} = {x} + {y}.
double kappa_sum(double x, double y, const KappaParam& k,
                 DeformKind kind = DeformKind::hyperbolic);

// x (-) y = x (+) (-y).
double kappa_diff(double x, double y, const KappaParam& k,
                  DeformKind kind = DeformKind::hyperbolic);

// x (x) y = [ {x} * {y} ]. Commutative, associative, distributes over
// the deformed sum. Raises OverflowError when the result would exceed
// double range (hyperbolic family only).
double kappa_prod(double x, double y, const KappaParam& k,
                  DeformKind kind = DeformKind::hyperbolic);

// Neutral element of the deformed product: [1], i.e. sinh(kappa)/kappa
// resp. sin(kappa)/kappa. Equals 1 at kappa = 0.
double kappa_prod_identity(const KappaParam& k, DeformKind kind = DeformKind::hyperbolic);

// Multiplicative inverse: [1/{x}]. Defined for x != 0.
double kappa_prod_inverse(double x, const KappaParam& k,
                          DeformKind kind = DeformKind::hyperbolic);

// x (/) y = x (x) [1/{y}].
double kappa_div(double x, double y, const KappaParam& k,
                 DeformKind kind = DeformKind::hyperbolic);

// n-fold deformed sum x (+) x (+) ... (+) x, evaluated as [n*{x}].
// Coincides with kappa_prod([n], x). n may be negative (opposites).
double kappa_nfold_sum(long n, double x, const KappaParam& k,
                       DeformKind kind = DeformKind::hyperbolic);

} // namespace kappa
