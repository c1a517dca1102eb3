#pragma once

#include <cstddef>
#include <span>

#include "cdirac/grid.hpp"

namespace cdirac {

// Points dropped at each end of a non-periodic grid when a residual norm is
// formed; the one-sided boundary stencils are the least accurate there.
inline constexpr std::size_t kResidualTrim = 3;

// Fourth-order finite differences. Central stencils in the interior,
// one-sided fourth-order stencils at the ends of a non-periodic grid and
// wrap-around stencils on a periodic grid. order must be 1 or 2.
Field differentiate(std::span<const cplx> f, const Grid& grid, int order);

// Fourth-order cumulative quadrature: F(x_i) = integral of f from
// x_anchor to x_i.
Field cumulative_integral(std::span<const cplx> f, const Grid& grid,
                          std::size_t anchor);

// L2 norm over the points that survive the residual trim.
double interior_norm(std::span<const cplx> f, const Grid& grid) noexcept;

// || -psi'' + U psi || / || psi || over interior points.
double schrodinger_residual(std::span<const cplx> psi,
                            std::span<const cplx> ueff, const Grid& grid);

template <typename Sampler>
double schrodinger_residual_fn(std::span<const cplx> psi, Sampler&& ueff,
                               const Grid& grid) {
  const Field u = sample(grid, ueff);
  return schrodinger_residual(psi, u, grid);
}

}  // namespace cdirac
