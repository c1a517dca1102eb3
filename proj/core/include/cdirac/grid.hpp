#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cdirac {

using cplx = std::complex<double>;
using Field = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;

// Uniform 1-D grid. Non-periodic grids include both endpoints, so
// h = (x1 - x0) / (N - 1). Periodic grids cover one period [x0, x1) and do
// not store the wrapped endpoint, so h = (x1 - x0) / N.
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 16;

  Grid(double x0, double x1, std::size_t n, bool periodic = false);

  static Grid periodic(double x0, double period, std::size_t n) {
    return Grid(x0, x0 + period, n, true);
  }

  double x0() const noexcept { return x0_; }
  double x1() const noexcept { return x1_; }
  std::size_t size() const noexcept { return n_; }
  bool is_periodic() const noexcept { return periodic_; }
  double h() const noexcept { return h_; }
  double length() const noexcept { return x1_ - x0_; }

  double operator[](std::size_t i) const noexcept {
    return x0_ + h_ * static_cast<double>(i);
  }
  std::vector<double> points() const;

  // Index of the grid point closest to x (clamped to the grid).
  std::size_t nearest_index(double x) const noexcept;

  bool operator==(const Grid&) const = default;

 private:
  double x0_;
  double x1_;
  std::size_t n_;
  bool periodic_;
  double h_;
};

// Samples f at every grid point.
template <typename F>
Field sample(const Grid& grid, F&& f) {
  Field out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
  return out;
}

double l2_norm(std::span<const cplx> f) noexcept;
double max_abs(std::span<const cplx> f) noexcept;

// Scales f so that max |f| = 1. Leaves an all-zero field unchanged.
void normalize_max(Field& f) noexcept;

}  // namespace cdirac
