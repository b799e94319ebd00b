#pragma once

namespace kappa {

// Bessel function of the first kind for integer order 0 <= m <= 12.
// Ascending series for |u| <= 14, Hankel asymptotic expansion beyond;
// in the crossover region the worst case (m = 12 just above u = 14) is
// accurate to about 1e-10 absolute, everywhere else near full precision.
double bessel_j(int m, double u);

// McMahon estimate of the n-th positive zero of J_m (n = 1, 2, ...).
// Good to O(1/n) absolute; used to cut oscillatory integrals into
// sign-coherent blocks, which needs no more than that.
double bessel_j_zero(int m, int n);

} // namespace kappa
