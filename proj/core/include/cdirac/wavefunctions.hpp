#pragma once

#include <optional>
#include <vector>

#include "cdirac/levels.hpp"
#include "cdirac/potentials.hpp"

namespace cdirac {

// psi_- of a cotangent level on a grid strictly inside (0, pi):
//   (y - 1)^{alpha/2} (y + 1)^{beta/2} P_n^{(alpha, beta)}(y),  y = i cot x,
// alpha = -(s + n) + a, beta = -(s + n) - a with s = V0 and
// a = eps V0 / (V0 + n). Powers are phase-continuous from x = pi/2.
// Unnormalized.
Field rosen_morse_wavefunction(const AnalyticLevel& level, const Grid& grid);

// Scarf II (hyperbolic) state of V = A^2 - (B^2 + A^2 + A) sech^2 z
// + i B (2A + 1) sech z tanh z with z = x - i shift:
//   cosh(z)^{-A} exp(-i B gd(z)) P_n^{(B - A - 1/2, -B - A - 1/2)}(i sinh z),
// gd(z) = arctan(sinh z) integrated along the grid from x = 0. Requires
// |shift| < pi/2. Unnormalized.
Field scarf2_wavefunction(int n, double a, double b, const Grid& grid,
                          double shift = 0.0);

// Supersymmetric ground state exp(-integral W) of a Lorentz-scalar
// superpotential, anchored at anchor_index. Solves (d + W) psi = 0.
Field lorentz_ground_state(const LorentzScalar& w, const Grid& grid);

struct ZeroModeState {
  int n = 0;
  double ky = 0.0;
  Field psi_minus;
  Field psi_plus;
};

struct ZeroModeSet {
  std::vector<ZeroModeState> states;
  // Shifted parabola: the solution of the psi_+ equation that is dropped in
  // favour of psi_+ = 0 (it grows at large |x|).
  std::optional<Field> discarded_plus;
  // Shifted sech: floor(lambda - 3/2); informational only.
  std::optional<int> reported_degeneracy;
};

// Closed-form eps = 0 states of the four zero-mode families. Other specs
// throw UnsupportedCaseError.
ZeroModeSet zero_mode(const PotentialSpec& spec, const Grid& grid);

}  // namespace cdirac
