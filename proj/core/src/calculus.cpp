#include "cdirac/calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

Field first_derivative(std::span<const cplx> f, const Grid& g) {
  const std::size_t n = f.size();
  const double c = 1.0 / (12.0 * g.h());
  Field d(n);
  if (g.is_periodic()) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      d[i] = c * (f[wrap(k - 2, n)] - 8.0 * f[wrap(k - 1, n)] +
                  8.0 * f[wrap(k + 1, n)] - f[wrap(k + 2, n)]);
    }
    return d;
  }
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
              3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  const std::size_t m = n - 1;
  d[m] = -c * (-25.0 * f[m] + 48.0 * f[m - 1] - 36.0 * f[m - 2] +
               16.0 * f[m - 3] - 3.0 * f[m - 4]);
  d[m - 1] = -c * (-3.0 * f[m] - 10.0 * f[m - 1] + 18.0 * f[m - 2] -
                   6.0 * f[m - 3] + f[m - 4]);
  return d;
}

Field second_derivative(std::span<const cplx> f, const Grid& g) {
  const std::size_t n = f.size();
  const double c = 1.0 / (12.0 * g.h() * g.h());
  Field d(n);
  if (g.is_periodic()) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      d[i] = c * (-f[wrap(k - 2, n)] + 16.0 * f[wrap(k - 1, n)] -
                  30.0 * f[i] + 16.0 * f[wrap(k + 1, n)] -
                  f[wrap(k + 2, n)]);
    }
    return d;
  }
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = c * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] +
                16.0 * f[i + 1] - f[i + 2]);
  d[0] = c * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] +
              61.0 * f[4] - 10.0 * f[5]);
  d[1] = c * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] -
              6.0 * f[4] + f[5]);
  const std::size_t m = n - 1;
  d[m] = c * (45.0 * f[m] - 154.0 * f[m - 1] + 214.0 * f[m - 2] -
              156.0 * f[m - 3] + 61.0 * f[m - 4] - 10.0 * f[m - 5]);
  d[m - 1] = c * (10.0 * f[m] - 15.0 * f[m - 1] - 4.0 * f[m - 2] +
                  14.0 * f[m - 3] - 6.0 * f[m - 4] + f[m - 5]);
  return d;
}

}  // namespace

Field differentiate(std::span<const cplx> f, const Grid& grid, int order) {
  if (f.size() != grid.size())
    throw std::invalid_argument("field length does not match grid");
  switch (order) {
    case 1:
      return first_derivative(f, grid);
    case 2:
      return second_derivative(f, grid);
    default:
      throw std::invalid_argument("differentiation order must be 1 or 2");
  }
}

Field cumulative_integral(std::span<const cplx> f, const Grid& grid,
                          std::size_t anchor) {
  const std::size_t n = f.size();
  if (n != grid.size())
    throw std::invalid_argument("field length does not match grid");
  if (anchor >= n) throw std::out_of_range("anchor index outside grid");

  const double c = grid.h() / 24.0;
  // step[i] = integral over [x_i, x_{i+1}]
  Field step(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (grid.is_periodic()) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      step[i] = c * (-f[wrap(k - 1, n)] + 13.0 * f[i] +
                     13.0 * f[wrap(k + 1, n)] - f[wrap(k + 2, n)]);
    } else if (i == 0) {
      step[i] = c * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    } else if (i + 2 == n) {
      step[i] = c * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] +
                     9.0 * f[n - 1]);
    } else {
      step[i] = c * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    }
  }

  Field out(n);
  out[anchor] = 0.0;
  for (std::size_t i = anchor; i + 1 < n; ++i) out[i + 1] = out[i] + step[i];
  for (std::size_t i = anchor; i > 0; --i) out[i - 1] = out[i] - step[i - 1];
  return out;
}

double interior_norm(std::span<const cplx> f, const Grid& grid) noexcept {
  const std::size_t trim = grid.is_periodic() ? 0 : kResidualTrim;
  if (f.size() <= 2 * trim) return 0.0;
  return l2_norm(f.subspan(trim, f.size() - 2 * trim));
}

double schrodinger_residual(std::span<const cplx> psi,
                            std::span<const cplx> ueff, const Grid& grid) {
  if (psi.size() != grid.size() || ueff.size() != grid.size())
    throw std::invalid_argument("field length does not match grid");
  const double norm = interior_norm(psi, grid);
  if (norm == 0.0)
    throw UndefinedResidualError("residual of an all-zero field");
  const Field d2 = differentiate(psi, grid, 2);
  Field lhs(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    lhs[i] = -d2[i] + ueff[i] * psi[i];
  return interior_norm(lhs, grid) / norm;
}

}  // namespace cdirac
