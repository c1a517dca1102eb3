#pragma once

#include <vector>

#include "cdirac/potentials.hpp"

namespace cdirac {

struct AnalyticLevel {
  int n = 0;
  double epsilon = 0.0;  // Schrodinger-side eigenvalue
  double ky = 0.0;
  double s = 0.0;        // Rosen-Morse strength parameter (V0)
  double a = 0.0;        // Rosen-Morse: eps V0 / (V0 + n)
  int degeneracy = 1;
  // Lorentz families: the level sits on the continuum edge and is not a
  // bound state.
  bool threshold = false;
  // Lorentz families: Dirac energy sqrt(epsilon + ky^2).
  double energy = 0.0;
};

// Positive root of eps^2 = (n^2 + 2 V0 n + ky^2) / (1 - V0^2 / (V0 + n)^2).
// n = 0 has no finite value and throws SingularLevelError.
double rosen_morse_epsilon(double v0, double ky, int n);
std::vector<AnalyticLevel> rosen_morse_levels(double v0, double ky, int n_lo,
                                              int n_hi);

// Scarf II (trigonometric-hyperbolic) levels E_n = A^2 - (A - n)^2. The
// bound range is 0 <= n < A; anything else throws RangeError.
int scarf2_max_level(double a);
double scarf2_energy(double a, int n);
std::vector<AnalyticLevel> scarf2_levels(double a, int n_lo, int n_hi);

// Lorentz-scalar levels eps_n = E^2 - ky^2:
//   scarf1:                       (A + n)^2 - A^2, any n >= 0
//   scarf2, morse, poschl_teller: A^2 - (A - n)^2, 0 <= n <= floor(A)
// with n == A flagged as the continuum threshold.
int lorentz_max_level(LorentzCase kind, double a);
std::vector<AnalyticLevel> lorentz_levels(LorentzCase kind, double a,
                                          double ky, int n_lo, int n_hi);

struct KyCandidate {
  int n = 0;
  double ky_squared = 0.0;
  bool admissible = false;
};

// Tanh-sech example: with A = mu the Scarf II condition E_n = -ky^2 gives
// ky^2 = (mu - n)^2 - mu^2. Only ky^2 >= 0 is admissible. Requires mu > 1.
std::vector<KyCandidate> example2_ky_candidates(double mu, int n_max);
std::vector<KyCandidate> example2_ky_admissible(double mu, int n_max);

struct QuantizedMomentum {
  int n = 0;
  double ky = 0.0;
};

struct ShiftedSechQuantization {
  double a = 0.0;  // lambda - 1/2
  double b = 0.5;
  // (n, +ky) and (n, -ky) for every 0 <= n < lambda - 1/2
  std::vector<QuantizedMomentum> states;
  // floor(lambda - 3/2), kept as an informational count
  int reported_degeneracy = 0;
};

ShiftedSechQuantization shifted_sech_quantization(double lambda);

}  // namespace cdirac
