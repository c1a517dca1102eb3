#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cdirac/eigensolver.hpp"

namespace cdirac {

// Discretized -d^2/dx^2 + V(x) on a set of collocation points.
struct DiscreteOperator {
  ComplexMatrix matrix;
  std::vector<double> points;
};

using PotentialSampler = std::function<cplx(double)>;

// Sinc discrete variable representation on the open interval (x0, x1):
// n equally spaced interior points, spectrally accurate for states that
// have decayed before reaching the ends.
DiscreteOperator sinc_dvr_operator(double x0, double x1, std::size_t n,
                                   const PotentialSampler& v);

// Chebyshev collocation with Dirichlet conditions at x0 and x1. Uses the
// n - 1 interior Gauss-Lobatto nodes of degree n. Handles potentials that
// are singular at the interval ends.
DiscreteOperator chebyshev_dirichlet_operator(double x0, double x1,
                                              std::size_t n,
                                              const PotentialSampler& v);

}  // namespace cdirac
