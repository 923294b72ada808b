// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_CLIFFORD_HPP
#define NILSPEC_CLIFFORD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nilspec/cmatrix.hpp"

namespace nilspec {

// Gaussian integer a + bi.  Generator entries live in {0, +-1, +-i}; exact
// integer arithmetic lets the algebra relations be checked with equality
// instead of tolerances.
struct GInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GInt() = default;
  GInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

  GInt operator+(const GInt& o) const { return {re + o.re, im + o.im}; }
  GInt operator-(const GInt& o) const { return {re - o.re, im - o.im}; }
  GInt operator*(const GInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GInt operator-() const { return {-re, -im}; }
  GInt conj() const { return {re, -im}; }
  bool operator==(const GInt& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GInt& o) const { return !(*this == o); }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Dense matrix over the Gaussian integers, row-major.
class GMatrix {
 public:
  GMatrix() : rows_(0), cols_(0) {}
  GMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static GMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const GInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  GMatrix operator+(const GMatrix& o) const;
  GMatrix operator-(const GMatrix& o) const;
  GMatrix operator*(const GMatrix& o) const;
  GMatrix operator*(const GInt& s) const;
  GMatrix adjoint() const;
  bool operator==(const GMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Floating copy, optionally scaled; the exact-to-float boundary.
  CMatrix to_cmatrix(Complex scale = Complex(1.0, 0.0)) const;

 private:
  std::size_t rows_, cols_;
  std::vector<GInt> a_;
};

GMatrix gkron(const GMatrix& a, const GMatrix& b);

// The four 2x2 symbols closed under multiplication up to a unit phase:
// identity, diag(1,-1), and the two off-diagonal Hermitian involutions
// [[0,1],[1,0]] and [[0,i],[-i,0]].
enum class Pauli { One, OnePrime, Sigma1, Sigma2 };

GMatrix pauli_matrix(Pauli p);

// a*b = phase * c with phase a Gaussian unit; the whole Cayley table.
std::pair<GInt, Pauli> pauli_product(Pauli a, Pauli b);

// Clifford multiplication matrices for an n-dimensional frame split as
// n = 2m + k_alpha: the spinor space is C^(2^n') with n' = m + k_alpha/2
// rounded down, and gens holds U_1..U_m, V_1..V_m, W_1..W_{k_alpha} in
// that order.  Each generator G satisfies G* = -G, G^2 = -I, and distinct
// generators anticommute.
struct CliffordGen {
  int dim_n = 0;
  int m = 0;
  int k_alpha = 0;
  std::vector<GMatrix> gens;

  int n_prime() const { return m + k_alpha / 2; }
  std::size_t dim() const { return std::size_t(1) << n_prime(); }

  const GMatrix& u(int j) const { return gens[j - 1]; }            // 1-based
  const GMatrix& v(int j) const { return gens[m + j - 1]; }        // 1-based
  const GMatrix& w(int k) const { return gens[2 * m + k - 1]; }    // 1-based
};

// Tensor-product construction of the generators:
//   U_j = i * P'^(j-1) (x) s1 (x) 1...    (P' in the first j-1 slots)
//   V_j = i * P'^(j-1) (x) s2 (x) 1...
//   W_k = i * P'^(m + ceil(k/2) - 1) (x) s (x) 1...   (s1 for odd k, s2 for even)
// and, when k_alpha is odd, the final W is i times all-P'.
CliffordGen build_generators(int m, int k_alpha);

// C_j = -2 pi i d_j U_j V_j; diagonal with eigenvalue 2 pi d_j l_j on the
// basis vector indexed by l.
CMatrix c_j_matrix(const CliffordGen& gen, int j, double d_j);

// Basis vectors are indexed by sign vectors l in {+1,-1}^(n'); the flat
// index maps +1 to bit 0 and -1 to bit 1 with slot 1 most significant.
std::size_t ell_to_index(const std::vector<int>& ell);
std::vector<int> index_to_ell(std::size_t index, int n_prime);

}  // namespace nilspec

#endif  // NILSPEC_CLIFFORD_HPP
