#include <gtest/gtest.h>

#include <cmath>

#include "cdirac/errors.hpp"
#include "cdirac/levels.hpp"
#include "cdirac/potentials.hpp"
#include "cdirac/shooting.hpp"

using namespace cdirac;

namespace {

ShootingSetup decaying(double l) {
  ShootingSetup s;
  s.x0 = -l;
  s.x1 = l;
  s.max_step = 1e-2;
  s.bc = BoundaryKind::decaying;
  return s;
}

}  // namespace

TEST(Shooting, HarmonicOscillatorRoots) {
  const EnergyFamily f = [](double x, double e) { return cplx(x * x - e); };
  const auto curve = find_real_eigenvalues(f, 0.0, 8.0, 0.004, 1e-6, decaying(8.0));
  ASSERT_EQ(curve.roots.size(), 4u);
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(curve.roots[n].eps, 2.0 * n + 1.0, 1e-6);
}

TEST(Shooting, ShiftedParticleInBox) {
  const EnergyFamily f = [](double, double e) { return cplx(1.0 - e); };
  ShootingSetup s;
  s.x0 = 0.0;
  s.x1 = kPi;
  s.max_step = 1e-3;
  const auto curve = find_real_eigenvalues(f, 1.5, 17.5, 0.01, 1e-6, s);
  ASSERT_EQ(curve.roots.size(), 4u);
  for (int m = 1; m <= 4; ++m) EXPECT_NEAR(curve.roots[m - 1].eps - 1.0, m * m, 1e-6);
}

TEST(Shooting, MismatchCurveIsContinuous) {
  const EnergyFamily f = [](double x, double e) { return cplx(x * x - e); };
  const auto curve = find_real_eigenvalues(f, 0.0, 8.0, 0.01, 1e-6, decaying(8.0));
  for (std::size_t i = 1; i < curve.samples.size(); ++i) {
    ASSERT_TRUE(std::isfinite(curve.samples[i].abs_m));
    EXPECT_GT(curve.samples[i].eps, curve.samples[i - 1].eps);
    EXPECT_LT(std::abs(curve.samples[i].abs_m - curve.samples[i - 1].abs_m), 0.1);
  }
}

TEST(Shooting, CotangentFamilyRoot) {
  const PotentialSpec spec = RosenMorseCot{2.0};
  const EnergyFamily f = [spec](double x, double e) {
    return effective_potential(spec, e, 1.0, Branch::minus, x);
  };
  ShootingSetup s;
  s.x0 = 1e-3;
  s.x1 = kPi - 1e-3;
  s.max_step = 1e-3;
  const double e1 = rosen_morse_epsilon(2.0, 1.0, 1);
  EXPECT_NEAR(e1, std::sqrt(10.8), 1e-12);
  const auto curve = find_real_eigenvalues(f, e1 - 0.05, e1 + 0.05, 0.005, 1e-6, s);
  ASSERT_FALSE(curve.roots.empty());
  EXPECT_LT(curve.roots.front().abs_m, 1e-6);
  EXPECT_NEAR(curve.roots.front().eps, e1, 1e-5 * e1);
}

TEST(Shooting, DecayingNeedsForbiddenEnds) {
  const EnergyFamily f = [](double, double e) { return cplx(-1.0 - e); };
  EXPECT_THROW(shoot(f, 0.0, decaying(5.0)), BoundaryConditionError);
}

TEST(Shooting, RejectsEmptyScan) {
  const EnergyFamily f = [](double, double e) { return cplx(e); };
  EXPECT_THROW(find_real_eigenvalues(f, 1.0, 0.0, 0.1, 1e-6, decaying(1.0)),
               std::invalid_argument);
}
