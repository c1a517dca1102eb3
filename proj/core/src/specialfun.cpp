#include "cdirac/specialfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

// Relative size below which a recurrence factor counts as zero. Tighter
// thresholds let the recurrence lose most of its digits before switching.
constexpr double kDegenerateFactor = 1e-6;

// Generalized binomial C(z, k) for integer k >= 0.
cplx binomial(cplx z, int k) {
  cplx r = 1.0;
  for (int j = 0; j < k; ++j) r *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
  return r;
}

cplx int_power(cplx z, int k) {
  cplx r = 1.0;
  for (int j = 0; j < k; ++j) r *= z;
  return r;
}

bool near_zero(cplx v, cplx a, cplx b) {
  return std::abs(v) < kDegenerateFactor * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace

bool jacobi_recurrence_degenerate(int n, cplx alpha, cplx beta) {
  for (int m = 1; m < n; ++m) {
    const double md = m;
    if (near_zero(md + alpha + beta + 1.0, alpha, beta) ||
        near_zero(2.0 * md + alpha + beta, alpha, beta))
      return true;
  }
  return false;
}

cplx jacobi_series(int n, cplx alpha, cplx beta, cplx y) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be >= 0");
  const cplx lo = 0.5 * (y - 1.0);
  const cplx hi = 0.5 * (y + 1.0);
  const double nd = n;
  cplx sum = 0.0;
  for (int k = 0; k <= n; ++k)
    sum += binomial(nd + alpha, n - k) * binomial(nd + beta, k) *
           int_power(lo, k) * int_power(hi, n - k);
  return sum;
}

cplx jacobi(int n, cplx alpha, cplx beta, cplx y) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be >= 0");
  if (n == 0) return 1.0;
  const cplx p1 = 0.5 * ((alpha + beta + 2.0) * y + (alpha - beta));
  if (n == 1) return p1;
  if (jacobi_recurrence_degenerate(n, alpha, beta))
    return jacobi_series(n, alpha, beta, y);

  cplx prev = 1.0;
  cplx cur = p1;
  const cplx ab = alpha + beta;
  for (int m = 1; m < n; ++m) {
    const double md = m;
    const cplx s = 2.0 * md + ab;
    const cplx denom = 2.0 * (md + 1.0) * (md + ab + 1.0) * s;
    const cplx a1 = (s + 1.0) * ((s + 2.0) * s * y + alpha * alpha - beta * beta);
    const cplx a2 = 2.0 * (md + alpha) * (md + beta) * (s + 2.0);
    const cplx next = (a1 * cur - a2 * prev) / denom;
    prev = cur;
    cur = next;
  }
  return cur;
}

Field phase_continuous_log(std::span<const cplx> base, std::size_t anchor) {
  const std::size_t n = base.size();
  if (anchor >= n) throw std::out_of_range("anchor index outside samples");
  for (std::size_t i = 0; i < n; ++i)
    if (base[i] == cplx(0.0))
      throw BranchAnchorError("base vanishes at sample " + std::to_string(i));

  Field out(n);
  const auto unwrap = [](double prev_phase, const cplx& z) {
    double d = std::arg(z) - std::remainder(prev_phase, 2.0 * kPi);
    d = std::remainder(d, 2.0 * kPi);  // into [-pi, pi]
    return prev_phase + d;
  };
  out[anchor] = std::log(base[anchor]);
  for (std::size_t i = anchor + 1; i < n; ++i)
    out[i] = cplx(std::log(std::abs(base[i])), unwrap(out[i - 1].imag(), base[i]));
  for (std::size_t i = anchor; i > 0; --i)
    out[i - 1] = cplx(std::log(std::abs(base[i - 1])),
                      unwrap(out[i].imag(), base[i - 1]));
  return out;
}

Field phase_continuous_log_power(std::span<const cplx> base, cplx exponent,
                                 std::size_t anchor) {
  Field out = phase_continuous_log(base, anchor);
  for (auto& v : out) v = std::exp(exponent * v);
  return out;
}

Field arctan_by_integration(const std::function<cplx(double)>& y,
                            const std::function<cplx(double)>& dy,
                            const Grid& grid, std::size_t anchor) {
  const std::size_t n = grid.size();
  if (anchor >= n) throw std::out_of_range("anchor index outside grid");
  const auto integrand = [&](double x) {
    const cplx yy = y(x);
    const cplx den = 1.0 + yy * yy;
    if (std::abs(den) < 1e-300)
      throw BranchAnchorError("1 + y^2 vanishes at x = " + std::to_string(x));
    return dy(x) / den;
  };
  const auto simpson = [&](double a, double b) {
    return (b - a) / 6.0 *
           (integrand(a) + 4.0 * integrand(0.5 * (a + b)) + integrand(b));
  };

  Field step(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = grid[i];
    const double b = grid[i] + grid.h();
    const double fa = std::abs(integrand(a));
    const double fm = std::abs(integrand(0.5 * (a + b)));
    const double fb = std::abs(integrand(b));
    const double lo = std::min({fa, fm, fb});
    const double hi = std::max({fa, fm, fb});
    if (hi > 4.0 * lo) {
      const double q = 0.25 * (b - a);
      step[i] = 0.0;
      for (int k = 0; k < 4; ++k) step[i] += simpson(a + k * q, a + (k + 1) * q);
    } else {
      step[i] = simpson(a, b);
    }
  }

  Field out(n);
  out[anchor] = std::atan(y(grid[anchor]));
  for (std::size_t i = anchor; i + 1 < n; ++i) out[i + 1] = out[i] + step[i];
  for (std::size_t i = anchor; i > 0; --i) out[i - 1] = out[i] - step[i - 1];
  return out;
}

}  // namespace cdirac
