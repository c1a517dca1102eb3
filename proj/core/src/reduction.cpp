#include "cdirac/reduction.hpp"

#include <cmath>
#include <stdexcept>

#include "cdirac/calculus.hpp"
#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_ky(double ky) {
  if (!std::isfinite(ky)) throw std::invalid_argument("ky must be finite");
  if (ky == 0.0)
    throw DivisionForbiddenError(
        "reconstruction divides by ky; use ky_zero_solution for ky = 0");
}

void require_scalar(const PotentialSpec& spec) {
  if (is_lorentz(spec))
    throw UnsupportedCaseError(family_name(spec) +
                               " couples through sigma_z; use the Lorentz residual");
}

double pair_norm(const Field& a, const Field& b, const Grid& g) {
  const double na = interior_norm(a, g);
  const double nb = interior_norm(b, g);
  return std::sqrt(na * na + nb * nb);
}

ResidualPair scaled(const Field& r1, const Field& r2, double norm,
                    double scale, const Grid& g) {
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw UndefinedResidualError("spinor vanishes on the grid interior");
  const double d = norm * scale;
  return {interior_norm(r1, g) / d, interior_norm(r2, g) / d};
}

}  // namespace

SpinorField::SpinorField(Grid g, Field a, Field b, double ky_, double eps_)
    : grid(std::move(g)), psi_a(std::move(a)), psi_b(std::move(b)),
      ky(ky_), eps(eps_) {
  if (psi_a.size() != grid.size() || psi_b.size() != grid.size())
    throw std::invalid_argument("spinor components do not match the grid");
}

PmPair to_pm_basis(const SpinorField& s) {
  PmPair p{Field(s.grid.size()), Field(s.grid.size())};
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    p.plus[i] = s.psi_a[i] - s.psi_b[i];
    p.minus[i] = s.psi_a[i] + s.psi_b[i];
  }
  return p;
}

SpinorField from_pm_basis(const Field& plus, const Field& minus,
                          const Grid& grid, double ky, double eps) {
  if (plus.size() != grid.size() || minus.size() != grid.size())
    throw std::invalid_argument("components do not match the grid");
  Field a(grid.size()), b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    a[i] = 0.5 * (plus[i] + minus[i]);
    b[i] = 0.5 * (minus[i] - plus[i]);
  }
  return SpinorField(grid, std::move(a), std::move(b), ky, eps);
}

Field reconstruct_plus(const Field& psi_minus, const PotentialSpec& spec,
                       double eps, double ky, const Grid& grid) {
  require_ky(ky);
  require_scalar(spec);
  const Field d = differentiate(psi_minus, grid, 1);
  const Field u = sample_potential(spec, grid);
  Field out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = (kI * (u[i] - eps) * psi_minus[i] + d[i]) / ky;
  return out;
}

Field reconstruct_minus(const Field& psi_plus, const PotentialSpec& spec,
                        double eps, double ky, const Grid& grid) {
  require_ky(ky);
  require_scalar(spec);
  const Field d = differentiate(psi_plus, grid, 1);
  const Field u = sample_potential(spec, grid);
  Field out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = (-kI * (u[i] - eps) * psi_plus[i] + d[i]) / ky;
  return out;
}

SpinorField ky_zero_solution(const PotentialSpec& spec, double eps,
                             SpinorSign sign, const Grid& grid) {
  require_scalar(spec);
  if (!std::isfinite(eps)) throw std::invalid_argument("eps must be finite");
  Field shifted = sample_potential(spec, grid);
  for (auto& v : shifted) v -= eps;
  const Field phase = cumulative_integral(shifted, grid, anchor_index(spec, grid));
  const double s = sign == SpinorSign::plus ? 1.0 : -1.0;
  Field a(grid.size()), b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    a[i] = std::exp(-s * kI * phase[i]);
    b[i] = s * a[i];
  }
  return SpinorField(grid, std::move(a), std::move(b), 0.0, eps);
}

SpinorField spin_flip(const SpinorField& s) {
  return SpinorField(s.grid, s.psi_b, s.psi_a, -s.ky, s.eps);
}

ResidualPair dirac_residual(const SpinorField& s, const PotentialSpec& spec) {
  require_scalar(spec);
  const Grid& g = s.grid;
  const Field u = sample_potential(spec, g);
  const Field da = differentiate(s.psi_a, g, 1);
  const Field db = differentiate(s.psi_b, g, 1);
  Field r1(g.size()), r2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx v = u[i] - s.eps;
    r1[i] = v * s.psi_a[i] - kI * (db[i] + s.ky * s.psi_b[i]);
    r2[i] = v * s.psi_b[i] - kI * (da[i] - s.ky * s.psi_a[i]);
  }
  return scaled(r1, r2, pair_norm(s.psi_a, s.psi_b, g),
                1.0 + std::abs(s.eps) + std::abs(s.ky), g);
}

PmPair lorentz_transform(const Field& f_minus, const Field& f_plus) {
  if (f_minus.size() != f_plus.size())
    throw std::invalid_argument("component lengths differ");
  const double r = 1.0 / std::sqrt(2.0);
  PmPair p{Field(f_minus.size()), Field(f_minus.size())};
  for (std::size_t i = 0; i < f_minus.size(); ++i) {
    const cplx g1 = r * (f_minus[i] - kI * f_plus[i]);
    const cplx g2 = r * (-kI * f_minus[i] + f_plus[i]);
    p.minus[i] = -kI * g1;
    p.plus[i] = g2;
  }
  return p;
}

SpinorField lorentz_inverse_transform(const PmPair& reduced, const Grid& grid,
                                      double ky, double energy) {
  const double r = 1.0 / std::sqrt(2.0);
  Field fm(grid.size()), fp(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx g1 = kI * reduced.minus[i];
    const cplx g2 = reduced.plus[i];
    fm[i] = r * (g1 + kI * g2);
    fp[i] = r * (kI * g1 + g2);
  }
  return SpinorField(grid, std::move(fm), std::move(fp), ky, energy);
}

ResidualPair lorentz_residual(const PmPair& reduced, const LorentzScalar& w,
                              double energy, double ky, const Grid& grid) {
  const Field wv = sample_potential(w, grid);
  const Field dm = differentiate(reduced.minus, grid, 1);
  const Field dp = differentiate(reduced.plus, grid, 1);
  Field r1(grid.size()), r2(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    r1[i] = dm[i] + wv[i] * reduced.minus[i] - (energy + ky) * reduced.plus[i];
    r2[i] = -dp[i] + wv[i] * reduced.plus[i] - (energy - ky) * reduced.minus[i];
  }
  return scaled(r1, r2, pair_norm(reduced.plus, reduced.minus, grid),
                1.0 + std::abs(energy) + std::abs(ky), grid);
}

ResidualPair lorentz_dirac_residual(const SpinorField& f,
                                    const LorentzScalar& w) {
  const Grid& g = f.grid;
  const Field wv = sample_potential(w, g);
  const Field dm = differentiate(f.psi_a, g, 1);
  const Field dp = differentiate(f.psi_b, g, 1);
  Field r1(g.size()), r2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    r1[i] = wv[i] * f.psi_a[i] - kI * (dp[i] + f.ky * f.psi_b[i]) -
            f.eps * f.psi_a[i];
    r2[i] = kI * (f.ky * f.psi_a[i] - dm[i]) - wv[i] * f.psi_b[i] -
            f.eps * f.psi_b[i];
  }
  return scaled(r1, r2, pair_norm(f.psi_a, f.psi_b, g),
                1.0 + std::abs(f.eps) + std::abs(f.ky), g);
}

}  // namespace cdirac
