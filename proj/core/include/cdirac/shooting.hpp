#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cdirac/grid.hpp"

namespace cdirac {

// U_eff(x; eps) for an energy-dependent Schrodinger problem
// -psi'' + U_eff(x; eps) psi = 0.
using EnergyFamily = std::function<cplx(double x, double eps)>;

enum class BoundaryKind { dirichlet, decaying };

struct ShootingSetup {
  double x0 = 0.0;
  double x1 = 1.0;
  // Upper bound on the RK4 step; the step is further limited by
  // 1 / (10 sqrt(max |U_eff|)).
  double max_step = 1e-2;
  BoundaryKind bc = BoundaryKind::dirichlet;
  std::size_t renormalize_every = 50;
};

// Normalized Wronskian mismatch psi_L psi_R' - psi_L' psi_R at the middle of
// [x0, x1], after fixed-step RK4 integration inward from both ends.
cplx shoot(const EnergyFamily& family, double eps, const ShootingSetup& setup);

struct MismatchSample {
  double eps;
  double abs_m;
  cplx m;
};

struct RefinedRoot {
  double eps;
  double abs_m;
  cplx m;
  // 1 / |dM/deps| at the root
  double condition;
};

struct MismatchCurve {
  std::vector<MismatchSample> samples;
  std::vector<RefinedRoot> roots;
};

// Scans |M(eps)| over real eps in [eps_lo, eps_hi], refines every local
// minimum by golden-section search on |M|^2 down to a bracket of 1e-10 and
// keeps the ones whose final |M| is below tol.
MismatchCurve find_real_eigenvalues(const EnergyFamily& family, double eps_lo,
                                    double eps_hi, double scan_step,
                                    double tol, const ShootingSetup& setup);

}  // namespace cdirac
