#include <gtest/gtest.h>

#include <cmath>

#include "cdirac/calculus.hpp"
#include "cdirac/errors.hpp"
#include "cdirac/levels.hpp"
#include "cdirac/reduction.hpp"
#include "cdirac/wavefunctions.hpp"

using namespace cdirac;

namespace {

double residual(const Field& psi, const PotentialSpec& spec, double eps, double ky,
                Branch br, const Grid& g) {
  return schrodinger_residual(psi, sample_effective_potential(spec, eps, ky, br, g), g);
}

}  // namespace

TEST(RosenMorseWavefunction, SecondOrderResidual) {
  const Grid g(0.05, kPi - 0.05, 4001);
  for (double v0 : {1.0, 2.0, 3.5})
    for (double ky : {0.0, 1.0})
      for (const auto& l : rosen_morse_levels(v0, ky, 1, 4)) {
        const Field psi = rosen_morse_wavefunction(l, g);
        EXPECT_LT(residual(psi, RosenMorseCot{v0}, l.epsilon, ky, Branch::minus, g), 1e-6)
            << "V0=" << v0 << " ky=" << ky << " n=" << l.n;
      }
}

TEST(RosenMorseWavefunction, FirstOrderPairAtFiniteMomentum) {
  const Grid g(0.05, kPi - 0.05, 4001);
  const RosenMorseCot spec{2.0};
  for (const auto& l : rosen_morse_levels(2.0, 1.0, 1, 3)) {
    const Field minus = rosen_morse_wavefunction(l, g);
    const Field plus = reconstruct_plus(minus, spec, l.epsilon, 1.0, g);
    const auto r = dirac_residual(from_pm_basis(plus, minus, g, 1.0, l.epsilon), spec);
    EXPECT_LT(r.max(), 1e-6) << l.n;
  }
}

TEST(RosenMorseWavefunction, GridOutsideDomainThrows) {
  const auto l = rosen_morse_levels(1.0, 0.0, 1, 1).front();
  EXPECT_THROW(rosen_morse_wavefunction(l, Grid(0.0, 1.0, 64)), DomainError);
}

TEST(Scarf2Wavefunction, LadderResidual) {
  const Grid g(-10.0, 10.0, 4001);
  const double a = 3.0, b = 1.0;
  for (double shift : {0.0, 0.4}) {
    for (int n = 0; n < 3; ++n) {
      const Field psi = scarf2_wavefunction(n, a, b, g, shift);
      const double e = scarf2_energy(a, n);
      const Field u = sample(g, [&](double x) {
        const cplx z(x, -shift);
        const cplx s = 1.0 / std::cosh(z), t = std::tanh(z);
        return a * a - (b * b + a * a + a) * s * s + cplx(0, 1) * b * (2 * a + 1) * s * t - e;
      });
      EXPECT_LT(schrodinger_residual(psi, u, g), 1e-6) << "n=" << n << " shift=" << shift;
    }
  }
  EXPECT_THROW(scarf2_wavefunction(0, a, b, g, 2.0), DomainError);
}

TEST(ZeroModes, ShiftedParabola) {
  const Grid g(-8.0, 8.0, 4001);
  const ShiftedParabola spec{1.0};
  const auto set = zero_mode(spec, g);
  ASSERT_EQ(set.states.size(), 1u);
  const Field& m = set.states[0].psi_minus;
  const std::size_t mid = g.nearest_index(0.0);
  EXPECT_LT(std::abs(m.front()) / std::abs(m[mid]), 1e-27);
  EXPECT_LT(std::abs(m.back()) / std::abs(m[mid]), 1e-27);
  EXPECT_LT(residual(m, spec, 0.0, 0.0, Branch::minus, g), 1e-6);
  ASSERT_TRUE(set.discarded_plus.has_value());
  const Field& d = *set.discarded_plus;
  EXPECT_GT(std::abs(d.front()) / std::abs(d[mid]), 1e20);
  for (cplx v : set.states[0].psi_plus) EXPECT_EQ(v, cplx(0.0));
}

TEST(ZeroModes, TanhSech) {
  const Grid g(-12.0, 12.0, 4001);
  const TanhSech spec{3.0, 1.0};
  const auto set = zero_mode(spec, g);
  ASSERT_EQ(set.states.size(), 1u);
  EXPECT_LT(residual(set.states[0].psi_minus, spec, 0.0, 0.0, Branch::minus, g), 1e-6);
  EXPECT_THROW(zero_mode(TanhSech{-1.0, 1.0}, g), DomainError);
}

TEST(ZeroModes, SinePeriodicPair) {
  const Grid g = Grid::periodic(0.0, kPi, 512);
  const SinePeriodic spec{1.0};
  const auto set = zero_mode(spec, g);
  ASSERT_EQ(set.states.size(), 2u);
  EXPECT_LT(residual(set.states[0].psi_minus, spec, 0.0, 0.0, Branch::minus, g), 1e-6);
  EXPECT_LT(residual(set.states[1].psi_plus, spec, 0.0, 0.0, Branch::plus, g), 1e-6);
}

TEST(ZeroModes, ShiftedSechDiracResidual) {
  const Grid g(-40.0, 40.0, 8001);
  const ShiftedSech spec{2.0, 0.3};
  const auto set = zero_mode(spec, g);
  ASSERT_EQ(set.states.size(), 4u);
  ASSERT_TRUE(set.reported_degeneracy.has_value());
  for (const auto& s : set.states) {
    const auto r = dirac_residual(from_pm_basis(s.psi_plus, s.psi_minus, g, s.ky, 0.0), spec);
    EXPECT_LT(r.max(), 1e-6) << "n=" << s.n << " ky=" << s.ky;
    EXPECT_LT(residual(s.psi_plus, spec, 0.0, s.ky, Branch::plus, g), 1e-6);
  }
}

TEST(ZeroModes, OtherFamiliesUnsupported) {
  EXPECT_THROW(zero_mode(RosenMorseCot{1.0}, Grid(0.1, 3.0, 64)), UnsupportedCaseError);
}

TEST(LorentzGroundState, ResidualsPerFamily) {
  struct Case {
    LorentzScalar w;
    Grid g;
  };
  const Case cases[] = {
      {{LorentzCase::scarf1, 3, 1, 0.5}, Grid(-kPi / 2 + 0.05, kPi / 2 - 0.05, 4001)},
      {{LorentzCase::scarf2, 3, 1, 0.5}, Grid(-12, 12, 4001)},
      {{LorentzCase::morse, 2, 1, 0.5}, Grid(-3, 30, 4001)},
      {{LorentzCase::poschl_teller, 3, 1, 0.5}, Grid(1, 20, 4001)}};
  for (const auto& c : cases) {
    const Field psi = lorentz_ground_state(c.w, c.g);
    EXPECT_LT(residual(psi, c.w, 0.0, 0.0, Branch::minus, c.g), 1e-6)
        << lorentz_case_name(c.w.kind);
  }
}
