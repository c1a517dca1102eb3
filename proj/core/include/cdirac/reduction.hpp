#pragma once

#include "cdirac/grid.hpp"
#include "cdirac/potentials.hpp"

namespace cdirac {

// Two-component spinor (psi_A, psi_B) sampled on a grid, for momentum ky
// and energy eps.
struct SpinorField {
  SpinorField(Grid grid, Field psi_a, Field psi_b, double ky, double eps);

  Grid grid;
  Field psi_a;
  Field psi_b;
  double ky;
  double eps;
};

// psi_+ = psi_A - psi_B, psi_- = psi_A + psi_B.
struct PmPair {
  Field plus;
  Field minus;
};

PmPair to_pm_basis(const SpinorField& s);
SpinorField from_pm_basis(const Field& plus, const Field& minus,
                          const Grid& grid, double ky, double eps);

// psi_+ = [i (U - eps) psi_- + psi_-'] / ky
Field reconstruct_plus(const Field& psi_minus, const PotentialSpec& spec,
                       double eps, double ky, const Grid& grid);
// psi_- = [-i (U - eps) psi_+ + psi_+'] / ky
Field reconstruct_minus(const Field& psi_plus, const PotentialSpec& spec,
                        double eps, double ky, const Grid& grid);

enum class SpinorSign { plus, minus };

// ky = 0 solution psi_B = +-psi_A with psi_A = exp(-+i integral(U - eps)),
// integral anchored at anchor_index(spec, grid).
SpinorField ky_zero_solution(const PotentialSpec& spec, double eps,
                             SpinorSign sign, const Grid& grid);

// (psi_A, psi_B, ky) -> (psi_B, psi_A, -ky)
SpinorField spin_flip(const SpinorField& s);

struct ResidualPair {
  double first = 0.0;
  double second = 0.0;
  double max() const noexcept { return first > second ? first : second; }
};

// Residuals of the two first-order equations
//   (U - eps) psi_A - i (psi_B' + ky psi_B) = 0
//   (U - eps) psi_B - i (psi_A' - ky psi_A) = 0
// each as ||lhs|| / (||psi|| (1 + |eps| + |ky|)) over the trimmed interior.
ResidualPair dirac_residual(const SpinorField& s, const PotentialSpec& spec);

// Lorentz-scalar coupling. The original-frame spinor (f_-, f_+) relates to
// the reduced pair by (i psi_-, psi_+) = T^dagger (f_-, f_+),
// T = [[1, i], [i, 1]] / sqrt(2).
PmPair lorentz_transform(const Field& f_minus, const Field& f_plus);
// Returns (f_-, f_+) as (psi_a, psi_b) of a SpinorField.
SpinorField lorentz_inverse_transform(const PmPair& reduced, const Grid& grid,
                                      double ky, double energy);

// Residuals of the reduced pair
//   (d + W) psi_- = (E + ky) psi_+,   (-d + W) psi_+ = (E - ky) psi_-.
ResidualPair lorentz_residual(const PmPair& reduced, const LorentzScalar& w,
                              double energy, double ky, const Grid& grid);

// Residuals of the original-frame equations
//   W f_- - i (f_+' + ky f_+) = E f_-,   i (ky f_- - f_-') - W f_+ = E f_+,
// with (f_-, f_+) stored as (psi_a, psi_b) and E as eps.
ResidualPair lorentz_dirac_residual(const SpinorField& f,
                                    const LorentzScalar& w);

}  // namespace cdirac
