#include "cdirac/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace cdirac {

DiscreteOperator sinc_dvr_operator(double x0, double x1, std::size_t n,
                                   const PotentialSampler& v) {
  if (n < 4 || !(x1 > x0))
    throw std::invalid_argument("sinc DVR needs n >= 4 and x0 < x1");
  const double h = (x1 - x0) / static_cast<double>(n + 1);
  DiscreteOperator op{ComplexMatrix(n), std::vector<double>(n)};
  const double inv_h2 = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    op.points[i] = x0 + h * static_cast<double>(i + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        op.matrix(i, j) = inv_h2 * kPi * kPi / 3.0;
      } else {
        const double d = static_cast<double>(i) - static_cast<double>(j);
        const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        op.matrix(i, j) = inv_h2 * 2.0 * sign / (d * d);
      }
    }
    op.matrix(i, i) += v(op.points[i]);
  }
  return op;
}

DiscreteOperator chebyshev_dirichlet_operator(double x0, double x1,
                                              std::size_t n,
                                              const PotentialSampler& v) {
  if (n < 4 || !(x1 > x0))
    throw std::invalid_argument("Chebyshev operator needs n >= 4 and x0 < x1");
  const std::size_t m = n + 1;
  std::vector<double> t(m), c(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = std::cos(kPi * static_cast<double>(j) / static_cast<double>(n));
    c[j] = ((j == 0 || j == n) ? 2.0 : 1.0) * ((j % 2 == 0) ? 1.0 : -1.0);
  }
  // Differentiation matrix on [-1, 1] with the negative-sum trick on the
  // diagonal.
  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double val = (c[i] / c[j]) / (t[i] - t[j]);
      d[i * m + j] = val;
      row += val;
    }
    d[i * m + i] = -row;
  }
  const double half = 0.5 * (x1 - x0);
  const double scale = 1.0 / (half * half);

  const std::size_t k = n - 1;
  DiscreteOperator op{ComplexMatrix(k), std::vector<double>(k)};
  for (std::size_t i = 1; i < n; ++i) {
    op.points[i - 1] = x0 + half * (1.0 - t[i]);
    for (std::size_t j = 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < m; ++l) acc += d[i * m + l] * d[l * m + j];
      op.matrix(i - 1, j - 1) = -scale * acc;
    }
  }
  // the node order is reversed relative to x, which only permutes the basis
  for (std::size_t i = 0; i < k; ++i) op.matrix(i, i) += v(op.points[i]);
  return op;
}

}  // namespace cdirac
