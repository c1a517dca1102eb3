#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cdirac/grid.hpp"

namespace cdirac {

struct HillSpectrum {
  std::vector<cplx> eigenvalues;
  // largest |Fourier coefficient| of U_eff beyond the retained bandwidth
  double fourier_tail = 0.0;
  bool truncation_warning = false;
};

// Bloch spectrum of -d^2/dx^2 + U_eff(x) with U_eff of period `period`, in
// the plane-wave basis exp(i (k + 2 pi m / L) x), |m| <= modes. The Fourier
// coefficients of U_eff come from a discrete transform on 8 * modes samples.
// Eigenvalues are sorted by modulus.
HillSpectrum hill_band_eigenvalues(const std::function<cplx(double)>& ueff,
                                   double period, std::size_t modes,
                                   double bloch_k);

}  // namespace cdirac
