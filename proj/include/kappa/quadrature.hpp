#pragma once

#include "kappa/deformation.hpp"

#include <functional>
#include <vector>

namespace kappa {

// How semi-infinite tails are brought to finite form.
//
// kernel_map: reparametrize through t = sinh(kappa*theta)/kappa, the
// stretch under which the deformed exponential becomes exp(-s*theta).
// Power-law tails in t decay exponentially in theta, so progressive
// blocks converge geometrically. Exact for any integrand; requires
// kappa != 0 and degenerates as kappa -> 0, below 1e-6 the exponential
// map is used instead.
//
// exp_map: cover [a, c] directly, then substitute t = c*exp(u) and sum
// unit blocks in u until they stop contributing.
enum class TailStrategy { kernel_map, exp_map };

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_subdivisions = 2000;
    TailStrategy tail = TailStrategy::kernel_map;
    // Abscissae where the integrand jumps or kinks. Each one inside the
    // range becomes an initial segment edge: a feature sitting in the
    // node-free margin next to a panel edge passes the 15-point rule with
    // a zero error estimate, so it must be cut at, not discovered. Tail
    // strategies carry these points through their substitutions.
    std::vector<double> breakpoints;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    bool converged = false;
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Orientation is signed:
// integrate(f, b, a) = -integrate(f, a, b). Endpoints are never
// evaluated, so integrable endpoint singularities are handled by
// subdivision alone. A non-converged result carries the best estimate
// and converged = false; no exception is thrown for budget exhaustion.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Integral of f over [a, +inf) using spec.tail.
QuadratureResult integrate_tail(const Integrand& f, double a, const KappaParam& k,
                                const QuadratureSpec& spec = {});

// Integral of an eventually alternating integrand over [a, +inf).
// breakpoint(i), i = 0, 1, ... is an increasing sequence of cut points
// (sign changes or period boundaries); blocks between consecutive cuts
// are integrated adaptively and the block series is summed with
// iterated averaging, which accelerates alternating tails.
QuadratureResult integrate_oscillatory(const Integrand& f, double a,
                                       const std::function<double(int)>& breakpoint,
                                       const QuadratureSpec& spec = {});

} // namespace kappa
