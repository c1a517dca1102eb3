#include "cdirac/eigensolver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cdirac/errors.hpp"

namespace cdirac {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

Field ComplexMatrix::apply(const Field& v) const {
  Field out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

double abs1(const cplx& z) { return std::abs(z.real()) + std::abs(z.imag()); }

void balance(ComplexMatrix& a) {
  const std::size_t n = a.size();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void reduce_to_hessenberg(ComplexMatrix& a) {
  const std::size_t n = a.size();
  Field v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha_norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha_norm += std::norm(a(i, k));
    alpha_norm = std::sqrt(alpha_norm);
    if (alpha_norm == 0.0) continue;

    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    // v = x + phase*|x| e1, reflector H = I - 2 v v^H / (v^H v)
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] += phase * alpha_norm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    for (std::size_t j = k; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  cplx s;
};

// Rotation mapping (a, b) to (r, 0).
Givens make_givens(const cplx& a, const cplx& b) {
  const double aa = std::abs(a);
  const double bb = std::abs(b);
  if (bb == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, std::conj(b) / bb};
  const double r = std::hypot(aa, bb);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

cplx wilkinson_shift(const cplx& a, const cplx& b, const cplx& c,
                     const cplx& d) {
  // eigenvalue of [[a, b], [c, d]] closest to d
  const cplx tr_half = 0.5 * (a + d);
  const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const cplx l1 = tr_half + disc;
  const cplx l2 = tr_half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<cplx> dense_complex_eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.size();
  std::vector<cplx> eig;
  eig.reserve(n);
  if (n == 0) return eig;
  if (n == 1) {
    eig.push_back(a(0, 0));
    return eig;
  }

  balance(a);
  reduce_to_hessenberg(a);

  constexpr double ulp = std::numeric_limits<double>::epsilon();
  const double anorm = a.frobenius_norm();
  constexpr int kMaxIterPerEigenvalue = 60;

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iter = 0;
  std::vector<Givens> rot(n);

  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(a(0, 0));
      break;
    }
    // locate the start of the unreduced block ending at hi
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const auto l = static_cast<std::size_t>(lo);
      double scale = abs1(a(l, l)) + abs1(a(l - 1, l - 1));
      if (scale == 0.0) scale = anorm;
      if (abs1(a(l, l - 1)) <= ulp * scale) {
        a(l, l - 1) = 0.0;
        break;
      }
      --lo;
    }
    const auto h = static_cast<std::size_t>(hi);
    if (lo == hi) {
      eig.push_back(a(h, h));
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > kMaxIterPerEigenvalue) {
      throw ConvergenceError("complex QR iteration did not converge on block [" +
                             std::to_string(lo) + ", " + std::to_string(hi) +
                             "]");
    }

    cplx shift;
    if (iter % 10 == 0) {
      // exceptional shift to break cycles
      shift = a(h, h) + 0.75 * abs1(a(h, h - 1)) * cplx(1.0, 0.5);
    } else {
      shift = wilkinson_shift(a(h - 1, h - 1), a(h - 1, h), a(h, h - 1),
                              a(h, h));
    }

    const auto l = static_cast<std::size_t>(lo);
    for (std::size_t k = l; k <= h; ++k) a(k, k) -= shift;
    for (std::size_t k = l; k < h; ++k) {
      const Givens g = make_givens(a(k, k), a(k + 1, k));
      rot[k] = g;
      for (std::size_t j = k; j <= h; ++j) {
        const cplx x = a(k, j);
        const cplx y = a(k + 1, j);
        a(k, j) = g.c * x + g.s * y;
        a(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::size_t k = l; k < h; ++k) {
      const Givens& g = rot[k];
      const std::size_t last = std::min(k + 2, h);
      for (std::size_t i = l; i <= last; ++i) {
        const cplx x = a(i, k);
        const cplx y = a(i, k + 1);
        a(i, k) = x * g.c + y * std::conj(g.s);
        a(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::size_t k = l; k <= h; ++k) a(k, k) += shift;
  }
  return eig;
}

}  // namespace cdirac
