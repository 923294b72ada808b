// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/clifford.hpp"

#include "nilspec/errors.hpp"

namespace nilspec {

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GInt(1, 0);
  return m;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "integer matrix addition");
  }
  GMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "integer matrix subtraction");
  }
  GMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
  if (cols_ != o.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "integer matrix product");
  }
  GMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      GInt aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
      }
    }
  }
  return r;
}

GMatrix GMatrix::operator*(const GInt& s) const {
  GMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

GMatrix GMatrix::adjoint() const {
  GMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      r.at(j, i) = at(i, j).conj();
    }
  }
  return r;
}

CMatrix GMatrix::to_cmatrix(Complex scale) const {
  CMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const GInt& g = at(i, j);
      r.at(i, j) = scale * Complex(double(g.re), double(g.im));
    }
  }
  return r;
}

GMatrix gkron(const GMatrix& a, const GMatrix& b) {
  GMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      GInt aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return r;
}

GMatrix pauli_matrix(Pauli p) {
  GMatrix m(2, 2);
  switch (p) {
    case Pauli::One:
      m.at(0, 0) = GInt(1, 0);
      m.at(1, 1) = GInt(1, 0);
      break;
    case Pauli::OnePrime:
      m.at(0, 0) = GInt(1, 0);
      m.at(1, 1) = GInt(-1, 0);
      break;
    case Pauli::Sigma1:
      m.at(0, 1) = GInt(1, 0);
      m.at(1, 0) = GInt(1, 0);
      break;
    case Pauli::Sigma2:
      m.at(0, 1) = GInt(0, 1);
      m.at(1, 0) = GInt(0, -1);
      break;
  }
  return m;
}

std::pair<GInt, Pauli> pauli_product(Pauli a, Pauli b) {
  const GInt one(1, 0), pos_i(0, 1), neg_i(0, -1);
  if (a == Pauli::One) return {one, b};
  if (b == Pauli::One) return {one, a};
  if (a == b) return {one, Pauli::One};
  // The six mixed products.
  if (a == Pauli::Sigma1 && b == Pauli::Sigma2) return {neg_i, Pauli::OnePrime};
  if (a == Pauli::Sigma2 && b == Pauli::Sigma1) return {pos_i, Pauli::OnePrime};
  if (a == Pauli::Sigma1 && b == Pauli::OnePrime) return {pos_i, Pauli::Sigma2};
  if (a == Pauli::OnePrime && b == Pauli::Sigma1) return {neg_i, Pauli::Sigma2};
  if (a == Pauli::Sigma2 && b == Pauli::OnePrime) return {neg_i, Pauli::Sigma1};
  return {pos_i, Pauli::Sigma1};  // OnePrime * Sigma2
}

namespace {

// i times the tensor product with `sym` in `slot` (1-based), OnePrime in
// every earlier slot, identity in every later slot.
GMatrix tensor_generator(int n_prime, int slot, Pauli sym) {
  GMatrix m = GMatrix::identity(1);
  for (int s = 1; s <= n_prime; ++s) {
    Pauli p = (s < slot) ? Pauli::OnePrime : (s == slot ? sym : Pauli::One);
    m = gkron(m, pauli_matrix(p));
  }
  return m * GInt(0, 1);
}

GMatrix all_one_prime(int n_prime) {
  GMatrix m = GMatrix::identity(1);
  for (int s = 0; s < n_prime; ++s) m = gkron(m, pauli_matrix(Pauli::OnePrime));
  return m * GInt(0, 1);
}

}  // namespace

CliffordGen build_generators(int m, int k_alpha) {
  if (m < 0 || k_alpha < 0 || m + k_alpha < 1) {
    throw Error(ErrorCode::InvalidParameter, "need m >= 0, k_alpha >= 0, m + k_alpha >= 1");
  }
  CliffordGen g;
  g.dim_n = 2 * m + k_alpha;
  g.m = m;
  g.k_alpha = k_alpha;
  const int np = g.n_prime();
  for (int j = 1; j <= m; ++j) {
    g.gens.push_back(tensor_generator(np, j, Pauli::Sigma1));
  }
  for (int j = 1; j <= m; ++j) {
    g.gens.push_back(tensor_generator(np, j, Pauli::Sigma2));
  }
  for (int k = 1; k <= k_alpha; ++k) {
    if (k == k_alpha && (k_alpha % 2) == 1) {
      g.gens.push_back(all_one_prime(np));
    } else {
      int slot = m + (k + 1) / 2;
      g.gens.push_back(tensor_generator(np, slot, (k % 2) ? Pauli::Sigma1 : Pauli::Sigma2));
    }
  }
  return g;
}

CMatrix c_j_matrix(const CliffordGen& gen, int j, double d_j) {
  if (j < 1 || j > gen.m) {
    throw Error(ErrorCode::InvalidParameter, "c_j_matrix index out of range");
  }
  const double two_pi = 2.0 * 3.14159265358979323846;
  // U_j V_j is exact; the -2 pi i d_j scale enters only at the float boundary.
  GMatrix prod = gen.u(j) * gen.v(j);
  return prod.to_cmatrix(Complex(0.0, -two_pi * d_j));
}

std::size_t ell_to_index(const std::vector<int>& ell) {
  std::size_t idx = 0;
  for (int l : ell) {
    idx = (idx << 1) | (l == 1 ? 0u : 1u);
  }
  return idx;
}

std::vector<int> index_to_ell(std::size_t index, int n_prime) {
  std::vector<int> ell(n_prime);
  for (int s = 0; s < n_prime; ++s) {
    std::size_t bit = (index >> (n_prime - 1 - s)) & 1u;
    ell[s] = bit ? -1 : 1;
  }
  return ell;
}

}  // namespace nilspec
