#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cdirac/hill.hpp"
#include "cdirac/potentials.hpp"

using namespace cdirac;

namespace {

cplx closest_to_zero(const HillSpectrum& s) {
  return *std::min_element(s.eigenvalues.begin(), s.eigenvalues.end(),
                           [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
}

}  // namespace

TEST(Hill, FreeParticle) {
  const auto s = hill_band_eigenvalues([](double) { return cplx(0.0); }, kPi, 16, 0.0);
  ASSERT_EQ(s.eigenvalues.size(), 33u);
  const double expected[] = {0, 4, 4, 16, 16, 36, 36};
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(s.eigenvalues[i].real(), expected[i], 1e-10);
  EXPECT_FALSE(s.truncation_warning);
}

TEST(Hill, SineZeroModeIsBandEdge) {
  const auto s = hill_band_eigenvalues(
      [](double x) {
        const double v = std::sin(2.0 * x);
        return cplx(v * v + 2.0 * std::cos(2.0 * x));
      },
      kPi, 32, 0.0);
  EXPECT_LT(std::abs(closest_to_zero(s)), 1e-8);
}

TEST(Hill, ConstantShift) {
  const auto u = [](double x) { return cplx(0.0, std::sin(2.0 * x)); };
  const auto a = hill_band_eigenvalues(u, kPi, 16, 0.3);
  const auto b = hill_band_eigenvalues([&](double x) { return u(x) + 2.5; }, kPi, 16, 0.3);
  for (cplx l : a.eigenvalues) {
    double best = INFINITY;
    for (cplx m : b.eigenvalues) best = std::min(best, std::abs(m - (l + 2.5)));
    EXPECT_LT(best, 1e-10);
  }
}

TEST(Hill, StableUnderMoreModes) {
  const PotentialSpec spec = SinePeriodic{0.5};
  const auto u = [&](double x) { return effective_potential(spec, 0.0, 0.0, Branch::plus, x); };
  const cplx a = closest_to_zero(hill_band_eigenvalues(u, kPi, 32, 0.0));
  const cplx b = closest_to_zero(hill_band_eigenvalues(u, kPi, 40, 0.0));
  EXPECT_LT(std::abs(a - b), 1e-9);
}

TEST(Hill, TruncationWarningForRoughPotential) {
  const auto s = hill_band_eigenvalues(
      [](double x) { return cplx(x < 0.5 * kPi ? 1.0 : -1.0); }, kPi, 8, 0.0);
  EXPECT_TRUE(s.truncation_warning);
  EXPECT_GT(s.fourier_tail, 1e-12);
}

TEST(Hill, RejectsTooFewModes) {
  EXPECT_THROW(hill_band_eigenvalues([](double) { return cplx(0.0); }, kPi, 4, 0.0),
               std::invalid_argument);
}
