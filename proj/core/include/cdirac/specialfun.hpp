#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "cdirac/grid.hpp"

namespace cdirac {

struct JacobiParams {
  int n = 0;
  cplx alpha;
  cplx beta;
};

// P_n^{(alpha, beta)}(y) for complex alpha, beta, y. Uses the three-term
// recurrence; falls back to the explicit finite sum when a recurrence
// denominator comes close to zero (alpha + beta near a negative integer).
cplx jacobi(int n, cplx alpha, cplx beta, cplx y);
inline cplx jacobi(const JacobiParams& p, cplx y) {
  return jacobi(p.n, p.alpha, p.beta, y);
}

// Explicit sum  sum_k C(n+a, n-k) C(n+b, k) ((y-1)/2)^k ((y+1)/2)^(n-k).
cplx jacobi_series(int n, cplx alpha, cplx beta, cplx y);

// True when the recurrence for these parameters would divide by a
// near-zero factor.
bool jacobi_recurrence_degenerate(int n, cplx alpha, cplx beta);

// Logarithm of base samples with the imaginary part unwrapped along the
// sequence so adjacent samples never differ by more than pi. The value at
// anchor is the principal logarithm.
Field phase_continuous_log(std::span<const cplx> base, std::size_t anchor);

// exp(exponent * phase_continuous_log(base)).
Field phase_continuous_log_power(std::span<const cplx> base, cplx exponent,
                                 std::size_t anchor);

// arctan(y(x)) continued along the grid as the integral of
// y'(x) / (1 + y(x)^2), anchored at the principal arctan(y(x_anchor)).
// Each grid interval is integrated with Simpson's rule; intervals where the
// integrand magnitude spikes are split into four.
Field arctan_by_integration(const std::function<cplx(double)>& y,
                            const std::function<cplx(double)>& dy,
                            const Grid& grid, std::size_t anchor);

}  // namespace cdirac
