// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nilspec/errors.hpp"
#include "nilspec/tolerances.hpp"

namespace nilspec {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix addition");
  }
  CMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix subtraction");
  }
  CMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product");
  }
  CMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex aik = at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

CMatrix CMatrix::operator*(Complex s) const {
  CMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      r.at(j, i) = std::conj(at(i, j));
    }
  }
  return r;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = max_abs();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return worst <= tol * std::max(scale, 1e-300);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Complex aij = a.at(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return r;
}

namespace {

// Cyclic-by-row Jacobi on a dense real symmetric matrix held in s
// (n x n, row-major).  v accumulates rotations when non-null.
void jacobi_symmetric(std::vector<double>& s, std::size_t n,
                      std::vector<double>* v, double off_threshold,
                      int max_sweeps) {
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        off += 2.0 * s[idx(i, j)] * s[idx(i, j)];
      }
    }
    if (std::sqrt(off) <= off_threshold) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = s[idx(p, q)];
        if (apq == 0.0) continue;
        double app = s[idx(p, p)];
        double aqq = s[idx(q, q)];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0)
                       ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                       : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double skp = s[idx(k, p)];
          double skq = s[idx(k, q)];
          s[idx(k, p)] = c * skp - sn * skq;
          s[idx(k, q)] = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double spk = s[idx(p, k)];
          double sqk = s[idx(q, k)];
          s[idx(p, k)] = c * spk - sn * sqk;
          s[idx(q, k)] = sn * spk + c * sqk;
        }
        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            double vkp = (*v)[idx(k, p)];
            double vkq = (*v)[idx(k, q)];
            (*v)[idx(k, p)] = c * vkp - sn * vkq;
            (*v)[idx(k, q)] = sn * vkp + c * vkq;
          }
        }
      }
    }
  }
  throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap exceeded");
}

EigenPairs eig_impl(const CMatrix& m, bool want_vectors) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "eigensolver needs a square matrix");
  }
  if (!m.is_hermitian(tol().hermitian_check)) {
    throw Error(ErrorCode::NotHermitian, "matrix fails the Hermitian check");
  }
  const std::size_t n = m.rows();
  if (n == 0) return {{}, CMatrix(0, 0)};

  // Real-symmetric embedding [[X, -Y], [Y, X]] of M = X + iY.
  const std::size_t n2 = 2 * n;
  std::vector<double> e(n2 * n2, 0.0);
  auto idx = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double x = m.at(i, j).real();
      double y = m.at(i, j).imag();
      e[idx(i, j)] = x;
      e[idx(i + n, j + n)] = x;
      e[idx(i, j + n)] = -y;
      e[idx(i + n, j)] = y;
    }
  }

  double scale = 0.0;
  for (double x : e) scale += x * x;
  scale = std::sqrt(scale);

  std::vector<double> vecs;
  std::vector<double>* vptr = nullptr;
  if (want_vectors) {
    vecs.assign(n2 * n2, 0.0);
    for (std::size_t i = 0; i < n2; ++i) vecs[idx(i, i)] = 1.0;
    vptr = &vecs;
  }
  jacobi_symmetric(e, n2, vptr, tol().jacobi_off * std::max(scale, 1e-300),
                   tol().jacobi_max_sweeps);

  std::vector<std::size_t> order(n2);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return e[idx(a, a)] < e[idx(b, b)];
  });

  // Every eigenvalue of M appears twice in the embedding; pick alternates.
  EigenPairs out;
  out.values.reserve(n);
  if (want_vectors) out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t col = order[2 * k];
    out.values.push_back(e[idx(col, col)]);
    if (want_vectors) {
      // Embedding eigenvector (x; y) maps back to the complex vector x + iy.
      for (std::size_t i = 0; i < n; ++i) {
        out.vectors.at(i, k) = Complex(vecs[idx(i, col)], vecs[idx(i + n, col)]);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  return eig_impl(m, false).values;
}

EigenPairs hermitian_eigenpairs(const CMatrix& m) {
  return eig_impl(m, true);
}

bool in_shifted_integers(const Rational& x, const Rational& shift) {
  return (x - shift).is_integer();
}

}  // namespace nilspec
