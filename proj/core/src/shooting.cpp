#include "cdirac/shooting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

using State = std::array<cplx, 2>;  // (psi, psi')

State rk4_step(const EnergyFamily& u, double eps, double x, double h,
               const State& y) {
  const cplx u0 = u(x, eps);
  const cplx um = u(x + 0.5 * h, eps);
  const cplx u1 = u(x + h, eps);
  const State k1{y[1], u0 * y[0]};
  const State y2{y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]};
  const State k2{y2[1], um * y2[0]};
  const State y3{y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]};
  const State k3{y3[1], um * y3[0]};
  const State y4{y[0] + h * k3[0], y[1] + h * k3[1]};
  const State k4{y4[1], u1 * y4[0]};
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

double state_norm(const State& y) {
  return std::sqrt(std::norm(y[0]) + std::norm(y[1]));
}

State integrate(const EnergyFamily& u, double eps, double x, double h,
                std::size_t steps, State y, std::size_t renorm) {
  for (std::size_t s = 0; s < steps; ++s) {
    y = rk4_step(u, eps, x, h, y);
    x += h;
    if ((s + 1) % renorm == 0) {
      const double nrm = state_norm(y);
      if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw ConvergenceError("shooting state lost finiteness");
      y[0] /= nrm;
      y[1] /= nrm;
    }
  }
  return y;
}

}  // namespace

cplx shoot(const EnergyFamily& family, double eps, const ShootingSetup& s) {
  if (!(s.x1 > s.x0) || !(s.max_step > 0.0))
    throw std::invalid_argument("shooting needs x0 < x1 and max_step > 0");
  const double length = s.x1 - s.x0;

  double umax = 0.0;
  const auto probes = static_cast<std::size_t>(std::ceil(length / s.max_step));
  for (std::size_t i = 0; i <= probes; ++i) {
    const double x =
        s.x0 + length * static_cast<double>(i) / static_cast<double>(probes);
    umax = std::max(umax, std::abs(family(x, eps)));
  }
  double h = s.max_step;
  if (umax > 0.0) h = std::min(h, 1.0 / (10.0 * std::sqrt(umax)));
  auto steps = static_cast<std::size_t>(std::ceil(length / h));
  if (steps % 2 != 0) ++steps;
  h = length / static_cast<double>(steps);
  const std::size_t half = steps / 2;

  State left{0.0, 1.0};
  State right{0.0, 1.0};
  if (s.bc == BoundaryKind::decaying) {
    const cplx ul = family(s.x0, eps);
    const cplx ur = family(s.x1, eps);
    if (!(ul.real() > 0.0) || !(ur.real() > 0.0))
      throw BoundaryConditionError(
          "decaying boundary condition needs Re U_eff > 0 at both ends");
    left = {1.0, std::sqrt(ul)};
    right = {1.0, -std::sqrt(ur)};
  }
  const std::size_t renorm = std::max<std::size_t>(1, s.renormalize_every);
  left = integrate(family, eps, s.x0, h, half, left, renorm);
  right = integrate(family, eps, s.x1, -h, half, right, renorm);

  const double nl = state_norm(left);
  const double nr = state_norm(right);
  if (!(nl > 0.0) || !(nr > 0.0))
    throw ConvergenceError("shooting produced a null state");
  return (left[0] * right[1] - left[1] * right[0]) / (nl * nr);
}

MismatchCurve find_real_eigenvalues(const EnergyFamily& family, double eps_lo,
                                    double eps_hi, double scan_step,
                                    double tol, const ShootingSetup& setup) {
  if (!(eps_lo < eps_hi) || !(scan_step > 0.0))
    throw std::invalid_argument("need eps_lo < eps_hi and scan_step > 0");

  const auto count =
      static_cast<std::size_t>(std::floor((eps_hi - eps_lo) / scan_step)) + 1;
  MismatchCurve curve;
  curve.samples.resize(count);

  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t j = begin; j < end; ++j) {
        const double e = eps_lo + scan_step * static_cast<double>(j);
        const cplx m = shoot(family, e, setup);
        curve.samples[j] = {e, std::abs(m), m};
      }
    }));
  }
  for (auto& j : jobs) j.get();

  const auto objective = [&](double e) {
    return std::norm(shoot(family, e, setup));
  };
  constexpr double kInvPhi = 0.6180339887498949;
  for (std::size_t j = 1; j + 1 < count; ++j) {
    const auto& s = curve.samples;
    if (!(s[j].abs_m <= s[j - 1].abs_m && s[j].abs_m < s[j + 1].abs_m))
      continue;
    double a = s[j - 1].eps;
    double b = s[j + 1].eps;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-10) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = objective(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = objective(d);
      }
    }
    const double root = 0.5 * (a + b);
    const cplx m = shoot(family, root, setup);
    if (std::abs(m) >= tol) continue;
    constexpr double delta = 1e-6;
    const cplx slope = (shoot(family, root + delta, setup) -
                        shoot(family, root - delta, setup)) /
                       (2.0 * delta);
    const double cond =
        std::abs(slope) > 0.0 ? 1.0 / std::abs(slope) : INFINITY;
    curve.roots.push_back({root, std::abs(m), m, cond});
  }
  return curve;
}

}  // namespace cdirac
