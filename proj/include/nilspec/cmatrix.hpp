// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_CMATRIX_HPP
#define NILSPEC_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "nilspec/rational.hpp"

namespace nilspec {

using Complex = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(Complex s) const;
  CMatrix adjoint() const;

  // Largest entry magnitude.
  double max_abs() const;
  // Frobenius norm.
  double frobenius() const;

  // max|M - M*| <= tol * max|M| (zero matrices pass).
  bool is_hermitian(double tol) const;

  bool operator==(const CMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

// Kronecker product; dimensions multiply.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Ascending eigenvalues of a Hermitian matrix via cyclic Jacobi sweeps on
// the 2n x 2n real-symmetric embedding [[X, -Y], [Y, X]] of M = X + iY.
// Each eigenvalue of M appears twice in the embedding; the doubled list is
// sorted and every second entry returned.
// Throws Error(NotHermitian) when the Hermitian check fails and
// Error(NoConvergence) when the sweep cap is exceeded.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// As above but also recovers eigenvectors (columns of the returned matrix,
// same order as the eigenvalues) so callers can test residuals.
struct EigenPairs {
  std::vector<double> values;
  CMatrix vectors;
};
EigenPairs hermitian_eigenpairs(const CMatrix& m);

// True iff x - shift is an integer, decided exactly.
bool in_shifted_integers(const Rational& x, const Rational& shift);

}  // namespace nilspec

#endif  // NILSPEC_CMATRIX_HPP
