#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cdirac/calculus.hpp"
#include "cdirac/errors.hpp"
#include "cdirac/levels.hpp"
#include "cdirac/reduction.hpp"
#include "cdirac/wavefunctions.hpp"

using namespace cdirac;

namespace {

const cplx I(0.0, 1.0);

Field random_field(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  Field f(n);
  for (auto& v : f) v = {d(rng), d(rng)};
  return f;
}

SpinorField rosen_morse_spinor(const AnalyticLevel& l, const Grid& g) {
  const RosenMorseCot spec{l.s};
  const Field minus = rosen_morse_wavefunction(l, g);
  const Field plus = reconstruct_plus(minus, spec, l.epsilon, l.ky, g);
  return from_pm_basis(plus, minus, g, l.ky, l.epsilon);
}

}  // namespace

TEST(PmBasis, RoundTrip) {
  const Grid g(0.0, 1.0, 100);
  const SpinorField s(g, random_field(100, 1), random_field(100, 2), 0.3, 1.1);
  const PmPair p = to_pm_basis(s);
  const SpinorField back = from_pm_basis(p.plus, p.minus, g, 0.3, 1.1);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_LT(std::abs(back.psi_a[i] - s.psi_a[i]), 1e-15);
    EXPECT_LT(std::abs(back.psi_b[i] - s.psi_b[i]), 1e-15);
  }
}

TEST(PmBasis, SizeMismatchThrows) {
  const Grid g(0.0, 1.0, 32);
  EXPECT_THROW(SpinorField(g, Field(32), Field(31), 0, 0), std::invalid_argument);
}

TEST(DiracResidual, FreeParticlePlaneWave) {
  const Grid g = Grid::periodic(0.0, kPi, 256);
  const double q = 2.0, ky = 1.0, eps = std::sqrt(q * q + ky * ky);
  const Field a = sample(g, [&](double x) { return std::exp(I * q * x); });
  Field b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = (q + I * ky) / eps * a[i];
  const auto r = dirac_residual(SpinorField(g, a, b, ky, eps), SinePeriodic{0.0});
  EXPECT_LT(r.max(), 1e-6);
}

TEST(DiracResidual, RosenMorseLevels) {
  const Grid g(0.05, kPi - 0.05, 4001);
  for (const auto& l : rosen_morse_levels(2.0, 1.0, 1, 4))
    EXPECT_LT(dirac_residual(rosen_morse_spinor(l, g), RosenMorseCot{2.0}).max(), 1e-6);
}

TEST(DiracResidual, CorruptedSpinorIsDetected) {
  const Grid g(0.05, kPi - 0.05, 4001);
  SpinorField s = rosen_morse_spinor(rosen_morse_levels(2.0, 1.0, 1, 1).front(), g);
  for (std::size_t i = 0; i < g.size(); ++i) s.psi_b[i] *= 1.0 + 0.05 * std::sin(3 * g[i]);
  EXPECT_GT(dirac_residual(s, RosenMorseCot{2.0}).max(), 1e-3);
}

TEST(DiracResidual, ZeroSpinorIsUndefined) {
  const Grid g(0.0, 1.0, 64);
  EXPECT_THROW(dirac_residual(SpinorField(g, Field(64), Field(64), 0, 1), SinePeriodic{1.0}),
               UndefinedResidualError);
}

TEST(DiracResidual, LorentzSpecRejected) {
  const Grid g(-1.0, 1.0, 64);
  const SpinorField s(g, Field(64, 1.0), Field(64, 1.0), 0, 0);
  EXPECT_THROW(dirac_residual(s, LorentzScalar{LorentzCase::scarf2, 3, 1, 0}),
               UnsupportedCaseError);
}

TEST(Reconstruct, ZeroMomentumForbidden) {
  const Grid g(0.1, 3.0, 64);
  const Field f(64, 1.0);
  EXPECT_THROW(reconstruct_plus(f, RosenMorseCot{1.0}, 1.0, 0.0, g), DivisionForbiddenError);
  EXPECT_THROW(reconstruct_minus(f, RosenMorseCot{1.0}, 1.0, 0.0, g), DivisionForbiddenError);
}

TEST(KyZero, SolutionsSatisfyBothEquations) {
  // psi_A ~ sin^{+-V0}; the growing sign is checked away from the poles
  const Grid g(0.05, kPi - 0.05, 4001);
  const Grid inner(0.3, kPi - 0.3, 4001);
  for (double eps : {0.0, 2.5}) {
    EXPECT_LT(dirac_residual(ky_zero_solution(RosenMorseCot{1.5}, eps, SpinorSign::plus, g),
                             RosenMorseCot{1.5})
                  .max(),
              1e-6);
    EXPECT_LT(
        dirac_residual(ky_zero_solution(RosenMorseCot{1.5}, eps, SpinorSign::minus, inner),
                       RosenMorseCot{1.5})
            .max(),
        1e-6);
  }
}

TEST(KyZero, CotangentModulusIsSinePower) {
  const Grid g(0.05, kPi - 0.05, 2001);
  const double v0 = 1.5;
  const SpinorField s = ky_zero_solution(RosenMorseCot{v0}, 0.7, SpinorSign::plus, g);
  for (std::size_t i = 0; i < g.size(); i += 50)
    EXPECT_NEAR(std::abs(s.psi_a[i]), std::pow(std::sin(g[i]), v0), 1e-9);
}

TEST(KyZero, ParabolaPhase) {
  const Grid g(-3.0, 3.0, 2001);
  const double mu = 1.0;
  const SpinorField s = ky_zero_solution(ShiftedParabola{mu}, 0.0, SpinorSign::plus, g);
  const std::size_t k = g.nearest_index(0.0);
  const auto prim = [&](double x) { return std::pow(cplx(x, -mu), 3) / 3.0; };
  for (std::size_t i = 0; i < g.size(); i += 100) {
    const cplx want = std::exp(-I * (prim(g[i]) - prim(g[k])));
    const cplx got = s.psi_a[i] / s.psi_a[k];
    EXPECT_LT(std::abs(got - want), 1e-8 * std::abs(want));
    EXPECT_LT(std::abs(s.psi_b[i] - s.psi_a[i]), 1e-15 * std::abs(s.psi_a[i]));
  }
}

TEST(SpinFlip, SwapsEquations) {
  const Grid g(0.05, kPi - 0.05, 4001);
  const SpinorField s = rosen_morse_spinor(rosen_morse_levels(2.0, 1.0, 1, 1).front(), g);
  const SpinorField f = spin_flip(s);
  EXPECT_EQ(f.ky, -s.ky);
  const auto r = dirac_residual(s, RosenMorseCot{2.0});
  const auto rf = dirac_residual(f, RosenMorseCot{2.0});
  EXPECT_NEAR(rf.first, r.second, 1e-15);
  EXPECT_NEAR(rf.second, r.first, 1e-15);
  const SpinorField z = spin_flip(ky_zero_solution(RosenMorseCot{2.0}, 1.0, SpinorSign::plus, g));
  EXPECT_LT(dirac_residual(z, RosenMorseCot{2.0}).max(), 1e-6);
}

TEST(LorentzTransform, UnitaryRoundTrip) {
  const Grid g(0.0, 1.0, 50);
  const Field fm = random_field(50, 3), fp = random_field(50, 4);
  const PmPair p = lorentz_transform(fm, fp);
  for (std::size_t i = 0; i < 50; ++i)
    EXPECT_NEAR(std::norm(p.minus[i]) + std::norm(p.plus[i]), std::norm(fm[i]) + std::norm(fp[i]),
                1e-13);
  const SpinorField back = lorentz_inverse_transform(p, g, 0.0, 1.0);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_LT(std::abs(back.psi_a[i] - fm[i]), 1e-15);
    EXPECT_LT(std::abs(back.psi_b[i] - fp[i]), 1e-15);
  }
}

TEST(LorentzResidual, FreeSolution) {
  const Grid g(-5.0, 5.0, 2001);
  const LorentzScalar w{LorentzCase::scarf2, 0.0, 0.0, 0.0};
  const double q = 1.3, ky = 0.4, e = std::sqrt(q * q + ky * ky);
  PmPair p;
  p.minus = sample(g, [&](double x) { return std::exp(I * q * x); });
  p.plus.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) p.plus[i] = I * q / (e + ky) * p.minus[i];
  EXPECT_LT(lorentz_residual(p, w, e, ky, g).max(), 1e-8);
  const SpinorField f = lorentz_inverse_transform(p, g, ky, e);
  EXPECT_LT(lorentz_dirac_residual(f, w).max(), 1e-8);
}

TEST(LorentzResidual, GroundStateAtEnergyEqualMomentum) {
  const Grid g(-12.0, 12.0, 4001);
  const LorentzScalar w{LorentzCase::scarf2, 3.0, 1.0, 0.5};
  const double ky = 0.8;
  PmPair p{Field(g.size(), 0.0), lorentz_ground_state(w, g)};
  EXPECT_LT(lorentz_residual(p, w, ky, ky, g).max(), 1e-6);
  EXPECT_LT(lorentz_dirac_residual(lorentz_inverse_transform(p, g, ky, ky), w).max(), 1e-6);
  // wrong energy
  EXPECT_GT(lorentz_residual(p, w, ky + 0.5, ky, g).max(), 1e-3);
}

TEST(LorentzResidual, ZeroInputThrows) {
  const Grid g(-1.0, 1.0, 64);
  const PmPair p{Field(64), Field(64)};
  EXPECT_THROW(lorentz_residual(p, LorentzScalar{LorentzCase::scarf2, 1, 0, 0}, 1, 0, g),
               UndefinedResidualError);
}
