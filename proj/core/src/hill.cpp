#include "cdirac/hill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdirac/eigensolver.hpp"

namespace cdirac {

HillSpectrum hill_band_eigenvalues(const std::function<cplx(double)>& ueff,
                                   double period, std::size_t modes,
                                   double bloch_k) {
  if (modes < 8) throw std::invalid_argument("Hill matrix needs modes >= 8");
  if (!(period > 0.0)) throw std::invalid_argument("period must be positive");

  const std::size_t samples = 8 * modes;
  Field u(samples);
  for (std::size_t s = 0; s < samples; ++s)
    u[s] = ueff(period * static_cast<double>(s) / static_cast<double>(samples));

  // coeff[j + 4K] = (1/M) sum_s u_s exp(-2 pi i j s / M), |j| < 4K
  const auto k4 = static_cast<std::ptrdiff_t>(4 * modes);
  Field coeff(2 * static_cast<std::size_t>(k4));
  for (std::ptrdiff_t j = -k4; j < k4; ++j) {
    cplx acc = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      const double arg = -2.0 * kPi * static_cast<double>(j) *
                         static_cast<double>(s) /
                         static_cast<double>(samples);
      acc += u[s] * cplx(std::cos(arg), std::sin(arg));
    }
    coeff[static_cast<std::size_t>(j + k4)] = acc / static_cast<double>(samples);
  }

  HillSpectrum out;
  const auto k2 = static_cast<std::ptrdiff_t>(2 * modes);
  for (std::ptrdiff_t j = -k4; j < k4; ++j) {
    if (std::abs(j) < k2) continue;
    out.fourier_tail =
        std::max(out.fourier_tail, std::abs(coeff[static_cast<std::size_t>(j + k4)]));
  }
  out.truncation_warning = out.fourier_tail > 1e-12;

  const std::size_t dim = 2 * modes + 1;
  const auto kk = static_cast<std::ptrdiff_t>(modes);
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(r) - kk;
    for (std::size_t c = 0; c < dim; ++c) {
      const std::ptrdiff_t mp = static_cast<std::ptrdiff_t>(c) - kk;
      h(r, c) = coeff[static_cast<std::size_t>(m - mp + k4)];
    }
    const double q = bloch_k + 2.0 * kPi * static_cast<double>(m) / period;
    h(r, r) += q * q;
  }
  out.eigenvalues = dense_complex_eigenvalues(std::move(h));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const cplx& a, const cplx& b) {
              if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
              return a.real() < b.real();
            });
  return out;
}

}  // namespace cdirac
