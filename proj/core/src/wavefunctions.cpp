#include "cdirac/wavefunctions.hpp"

#include <cmath>

#include "cdirac/calculus.hpp"
#include "cdirac/errors.hpp"
#include "cdirac/reduction.hpp"
#include "cdirac/specialfun.hpp"

namespace cdirac {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_inside(const Grid& grid, double lo, double hi, const char* what) {
  if (!(grid.x0() > lo && grid.x1() < hi))
    throw DomainError(std::string(what) + ": grid must lie strictly inside the domain");
}

ZeroModeState parabola_mode(const ShiftedParabola& p, const Grid& grid,
                            std::optional<Field>& discarded) {
  const double mu = p.mu;
  // phase(x) = x^3/3 - mu^2 x - i mu x^2
  auto phase = [mu](double x) {
    return cplx(x * x * x / 3.0 - mu * mu * x, -mu * x * x);
  };
  ZeroModeState s;
  s.psi_minus = sample(grid, [&](double x) { return std::exp(-kI * phase(x)); });
  s.psi_plus.assign(grid.size(), 0.0);
  discarded = sample(grid, [&](double x) { return std::exp(kI * phase(x)); });
  return s;
}

}  // namespace

Field rosen_morse_wavefunction(const AnalyticLevel& level, const Grid& grid) {
  require_inside(grid, 0.0, kPi, "rosen-morse wavefunction");
  if (level.n < 0) throw RangeError("negative level index");
  const double big_n = level.s + level.n;
  const cplx alpha = -big_n + level.a;
  const cplx beta = -big_n - level.a;
  const Field y = sample(grid, [](double x) {
    return cplx(0.0, std::cos(x) / std::sin(x));
  });
  Field ym(y.size()), yp(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    ym[i] = y[i] - 1.0;
    yp[i] = y[i] + 1.0;
  }
  const std::size_t anchor = grid.nearest_index(0.5 * kPi);
  const Field pm = phase_continuous_log_power(ym, 0.5 * alpha, anchor);
  const Field pp = phase_continuous_log_power(yp, 0.5 * beta, anchor);
  Field out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    out[i] = pm[i] * pp[i] * jacobi(level.n, alpha, beta, y[i]);
  return out;
}

Field scarf2_wavefunction(int n, double a, double b, const Grid& grid,
                          double shift) {
  if (n < 0) throw RangeError("negative level index");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(shift))
    throw std::invalid_argument("Scarf II parameters must be finite");
  if (!(std::abs(shift) < 0.5 * kPi))
    throw DomainError("complex shift must satisfy |mu| < pi/2");
  auto z = [shift](double x) { return cplx(x, -shift); };
  const std::size_t anchor =
      (grid.x0() <= 0.0 && grid.x1() >= 0.0) ? grid.nearest_index(0.0)
                                             : grid.size() / 2;
  const Field ch = sample(grid, [&](double x) { return std::cosh(z(x)); });
  const Field pref = phase_continuous_log_power(ch, -a, anchor);
  const Field gd = arctan_by_integration(
      [&](double x) { return std::sinh(z(x)); },
      [&](double x) { return std::cosh(z(x)); }, grid, anchor);
  const cplx alpha = b - a - 0.5;
  const cplx beta = -b - a - 0.5;
  Field out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx y = kI * std::sinh(z(grid[i]));
    out[i] = pref[i] * std::exp(-kI * b * gd[i]) * jacobi(n, alpha, beta, y);
  }
  return out;
}

Field lorentz_ground_state(const LorentzScalar& w, const Grid& grid) {
  const Field wv = sample_potential(w, grid);
  const Field iw = cumulative_integral(wv, grid, anchor_index(w, grid));
  Field out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = std::exp(-iw[i]);
  return out;
}

ZeroModeSet zero_mode(const PotentialSpec& spec, const Grid& grid) {
  validate(spec);
  ZeroModeSet set;
  if (const auto* p = std::get_if<ShiftedParabola>(&spec)) {
    set.states.push_back(parabola_mode(*p, grid, set.discarded_plus));
  } else if (const auto* p = std::get_if<TanhSech>(&spec)) {
    if (!(p->mu > 0.0))
      throw DomainError("example2 zero mode requires mu > 0");
    ZeroModeState s;
    s.psi_minus = scarf2_wavefunction(0, p->mu, p->lambda, grid);
    s.psi_plus.assign(grid.size(), 0.0);
    set.states.push_back(std::move(s));
  } else if (const auto* p = std::get_if<SinePeriodic>(&spec)) {
    const double b = p->b;
    ZeroModeState lower;
    lower.psi_minus = sample(grid, [b](double x) {
      return cplx(std::exp(-0.5 * b * std::cos(2.0 * x)));
    });
    lower.psi_plus.assign(grid.size(), 0.0);
    ZeroModeState upper;
    upper.psi_minus.assign(grid.size(), 0.0);
    upper.psi_plus = sample(grid, [b](double x) {
      return cplx(std::exp(0.5 * b * std::cos(2.0 * x)));
    });
    set.states.push_back(std::move(lower));
    set.states.push_back(std::move(upper));
  } else if (const auto* p = std::get_if<ShiftedSech>(&spec)) {
    const ShiftedSechQuantization q = shifted_sech_quantization(p->lambda);
    for (const auto& st : q.states) {
      ZeroModeState s;
      s.n = st.n;
      s.ky = st.ky;
      s.psi_plus = scarf2_wavefunction(st.n, q.a, q.b, grid, p->mu);
      s.psi_minus = reconstruct_minus(s.psi_plus, spec, 0.0, st.ky, grid);
      set.states.push_back(std::move(s));
    }
    set.reported_degeneracy = q.reported_degeneracy;
  } else {
    throw UnsupportedCaseError(family_name(spec) + " has no closed-form zero mode");
  }
  return set;
}

}  // namespace cdirac
