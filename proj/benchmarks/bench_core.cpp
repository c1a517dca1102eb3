#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "cdirac/eigensolver.hpp"
#include "cdirac/hill.hpp"
#include "cdirac/potentials.hpp"
#include "cdirac/shooting.hpp"
#include "cdirac/specialfun.hpp"

using namespace cdirac;

static void BM_DenseEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = {d(rng), d(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(dense_complex_eigenvalues(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseEigenvalues)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

static void BM_ShootRosenMorse(benchmark::State& state) {
  const RosenMorseCot spec{2.0};
  const EnergyFamily family = [spec](double x, double eps) {
    return effective_potential(spec, eps, 1.0, Branch::minus, x);
  };
  ShootingSetup s;
  s.x0 = 1e-3;
  s.x1 = kPi - 1e-3;
  s.max_step = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(shoot(family, 3.3, s));
}
BENCHMARK(BM_ShootRosenMorse);

static void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cplx a(0.3, -1.0), b(-2.1, 0.4), y(0.2, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi(n, a, b, y));
}
BENCHMARK(BM_Jacobi)->Arg(2)->Arg(8)->Arg(32);

static void BM_HillBandEdge(benchmark::State& state) {
  const auto modes = static_cast<std::size_t>(state.range(0));
  const SinePeriodic spec{1.0};
  const auto u = [spec](double x) {
    return effective_potential(spec, 0.0, 0.0, Branch::minus, x);
  };
  for (auto _ : state) benchmark::DoNotOptimize(hill_band_eigenvalues(u, kPi, modes, 0.0));
}
BENCHMARK(BM_HillBandEdge)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_MAIN();
