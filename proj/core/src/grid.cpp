#include "cdirac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdirac/errors.hpp"

namespace cdirac {

Grid::Grid(double x0, double x1, std::size_t n, bool periodic)
    : x0_(x0), x1_(x1), n_(n), periodic_(periodic), h_(0.0) {
  if (n < kMinPoints)
    throw std::invalid_argument("grid needs at least 16 points");
  if (!std::isfinite(x0) || !std::isfinite(x1) || !(x1 > x0))
    throw std::invalid_argument("grid requires finite x0 < x1");
  h_ = periodic ? (x1 - x0) / static_cast<double>(n)
                : (x1 - x0) / static_cast<double>(n - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = (*this)[i];
  return xs;
}

std::size_t Grid::nearest_index(double x) const noexcept {
  const double t = std::round((x - x0_) / h_);
  if (t <= 0.0) return 0;
  const auto i = static_cast<std::size_t>(t);
  return std::min(i, n_ - 1);
}

double l2_norm(std::span<const cplx> f) noexcept {
  double s = 0.0;
  for (const auto& v : f) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(std::span<const cplx> f) noexcept {
  double m = 0.0;
  for (const auto& v : f) m = std::max(m, std::abs(v));
  return m;
}

void normalize_max(Field& f) noexcept {
  const double m = max_abs(f);
  if (m == 0.0) return;
  for (auto& v : f) v /= m;
}

}  // namespace cdirac
