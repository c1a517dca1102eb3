#pragma once

#include <cstddef>
#include <vector>

#include "cdirac/grid.hpp"

namespace cdirac {

// Dense row-major complex square matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) noexcept {
    return a_[i * n_ + j];
  }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }

  double frobenius_norm() const noexcept;
  Field apply(const Field& v) const;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

// All eigenvalues of a general complex matrix: radix-2 balancing,
// Householder reduction to upper Hessenberg form, then single-shift complex
// QR iteration with Wilkinson shifts and deflation. Order is unspecified.
// Throws ConvergenceError if a block fails to deflate within the
// iteration cap.
std::vector<cplx> dense_complex_eigenvalues(ComplexMatrix a);

}  // namespace cdirac
