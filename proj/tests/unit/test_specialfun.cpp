#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cdirac/errors.hpp"
#include "cdirac/specialfun.hpp"
#include "oracles.hpp"

using namespace cdirac;

TEST(Jacobi, DegreeZeroIsOne) {
  EXPECT_EQ(jacobi(0, {1.3, -2}, {0.2, 4}, {7, -1}), cplx(1.0));
}

TEST(Jacobi, DegreeOneLegendre) {
  EXPECT_NEAR(std::abs(jacobi(1, 0.0, 0.0, 0.3) - 0.3), 0.0, 1e-15);
}

TEST(Jacobi, DegreeTwoAgainstSeries) {
  const cplx i(0.0, 1.0);
  const cplx got = jacobi(2, i, -i, 0.5);
  const cplx want = oracle::jacobi_sum(2, i, -i, 0.5);
  EXPECT_LT(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)));
}

TEST(Jacobi, RecurrenceMatchesSeriesOnRandomDraws) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<int> deg(0, 6);
  auto draw = [&] {
    cplx z(u(rng), u(rng));
    if (std::abs(z) > 5.0) z *= 5.0 / std::abs(z);
    return z;
  };
  for (int k = 0; k < 200; ++k) {
    const int n = deg(rng);
    const cplx a = draw(), b = draw(), y = draw();
    const cplx want = oracle::jacobi_sum(n, a, b, y);
    const cplx got = jacobi(n, a, b, y);
    EXPECT_LT(std::abs(got - want) / std::max(1.0, std::abs(want)), 1e-10)
        << "n=" << n << " a=" << a << " b=" << b << " y=" << y;
  }
}

TEST(Jacobi, ReflectionSymmetry) {
  const cplx a(0.7, -1.2), b(-2.5, 0.4), y(0.3, 1.1);
  for (int n = 0; n <= 6; ++n) {
    const cplx lhs = jacobi(n, a, b, -y);
    const cplx rhs = (n % 2 ? -1.0 : 1.0) * jacobi(n, b, a, y);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Jacobi, DegenerateParametersUseSeries) {
  // alpha + beta = -6: the recurrence denominator 2m + alpha + beta vanishes at m = 3
  const cplx a(-3.0, 0.0), b(-3.0, 0.0);
  EXPECT_TRUE(jacobi_recurrence_degenerate(4, a, b));
  const cplx y(0.0, 0.8);
  for (int n = 0; n <= 5; ++n) {
    const cplx want = oracle::jacobi_sum(n, a, b, y);
    EXPECT_LT(std::abs(jacobi(n, a, b, y) - want), 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(PhaseContinuousPower, RealPositiveBase) {
  const Field base{0.5, 1.0, 2.0, 3.0, 4.0};
  const Field p = phase_continuous_log_power(base, 1.5, 2);
  for (std::size_t i = 0; i < base.size(); ++i)
    EXPECT_NEAR(std::abs(p[i] - std::pow(base[i].real(), 1.5)), 0.0, 1e-14);
}

TEST(PhaseContinuousPower, WindingBaseHasNoJumps) {
  const std::size_t n = 400;
  Field base(n);
  for (std::size_t i = 0; i < n; ++i)
    base[i] = std::polar(1.0, 4.0 * kPi * static_cast<double>(i) / (n - 1));
  const Field lg = phase_continuous_log(base, 0);
  for (std::size_t i = 1; i < n; ++i) EXPECT_LT(std::abs(lg[i].imag() - lg[i - 1].imag()), kPi);
  EXPECT_NEAR(lg.back().imag(), 4.0 * kPi, 1e-12);
  const Field p = phase_continuous_log_power(base, 0.5, 0);
  for (std::size_t i = 1; i < n; ++i)
    EXPECT_LT(std::abs(std::arg(p[i] / p[i - 1])), kPi);
}

TEST(PhaseContinuousPower, CotangentModulus) {
  const Grid g(0.01, kPi - 0.01, 801);
  const Field base = sample(g, [](double x) {
    const cplx y(0.0, std::cos(x) / std::sin(x));
    return y * y - 1.0;
  });
  const Field p = phase_continuous_log_power(base, -1.0, g.nearest_index(0.5 * kPi));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double s = std::sin(g[i]);
    EXPECT_NEAR(std::abs(p[i]), s * s, 1e-12);
  }
}

TEST(PhaseContinuousPower, ZeroSampleThrows) {
  const Field base{1.0, 0.0, 1.0};
  EXPECT_THROW(phase_continuous_log(base, 0), BranchAnchorError);
}

TEST(ArctanIntegration, RealArgument) {
  const Grid g(-4.0, 4.0, 801);
  const Field a = arctan_by_integration([](double x) { return cplx(x); },
                                        [](double) { return cplx(1.0); }, g, 400);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(a[i].real(), std::atan(g[i]), 1e-10);
}

TEST(ArctanIntegration, ImaginarySinhInsideUnitDisc) {
  const double edge = std::asinh(1.0) - 0.05;
  const Grid g(-edge, edge, 801);
  const Field a = arctan_by_integration([](double x) { return cplx(0.0, std::sinh(x)); },
                                        [](double x) { return cplx(0.0, std::cosh(x)); }, g,
                                        400);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(a[i].real(), 0.0, 1e-10);
    EXPECT_NEAR(a[i].imag(), std::atanh(std::sinh(g[i])), 1e-8);
  }
}

TEST(ArctanIntegration, ConstantArgument) {
  const Grid g(0.0, 1.0, 64);
  const Field a = arctan_by_integration([](double) { return cplx(2.0); },
                                        [](double) { return cplx(0.0); }, g, 10);
  for (cplx v : a) EXPECT_NEAR(v.real(), std::atan(2.0), 1e-15);
}
