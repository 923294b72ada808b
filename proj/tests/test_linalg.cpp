// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "nilspec/cmatrix.hpp"
#include "nilspec/errors.hpp"
#include "nilspec/rational.hpp"

using nilspec::CMatrix;
using nilspec::Complex;
using nilspec::Error;
using nilspec::ErrorCode;
using nilspec::Rational;

namespace {

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = Complex(dist(rng), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(dist(rng), dist(rng));
      m.at(i, j) = z;
      m.at(j, i) = std::conj(z);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  CMatrix a(2, 2);
  a.at(0, 0) = Complex(1, 0);
  a.at(0, 1) = Complex(0, 1);
  a.at(1, 0) = Complex(2, 0);
  a.at(1, 1) = Complex(0, -1);
  const CMatrix i2 = CMatrix::identity(2);

  const CMatrix sum = a + i2;
  CHECK(sum.at(0, 0) == Complex(2, 0));
  CHECK(sum.at(1, 1) == Complex(1, -1));

  const CMatrix prod = a * i2;
  CHECK(prod == a);

  const CMatrix adj = a.adjoint();
  CHECK(adj.at(1, 0) == Complex(0, -1));
  CHECK(adj.at(0, 1) == Complex(2, 0));

  const CMatrix scaled = a * Complex(0, 2);
  CHECK(scaled.at(0, 1) == Complex(-2, 0));

  CHECK(a.max_abs() == doctest::Approx(2.0));
  CHECK(a.frobenius() == doctest::Approx(std::sqrt(1.0 + 1.0 + 4.0 + 1.0)));

  CMatrix b(3, 2);
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("kronecker product") {
  CMatrix a(2, 2);
  a.at(0, 0) = Complex(1, 0);
  a.at(0, 1) = Complex(2, 0);
  a.at(1, 0) = Complex(3, 0);
  a.at(1, 1) = Complex(4, 0);
  CMatrix b(2, 2);
  b.at(0, 0) = Complex(0, 1);
  b.at(1, 1) = Complex(5, 0);

  const CMatrix k = nilspec::kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k.at(0, 0) == Complex(0, 1));
  CHECK(k.at(1, 1) == Complex(5, 0));
  CHECK(k.at(0, 2) == Complex(0, 2));
  CHECK(k.at(3, 3) == Complex(20, 0));
  CHECK(k.at(2, 0) == Complex(0, 3));
}

TEST_CASE("hermitian eigenvalues on known matrices") {
  CMatrix d(3, 3);
  d.at(0, 0) = Complex(3, 0);
  d.at(1, 1) = Complex(-1, 0);
  d.at(2, 2) = Complex(2, 0);
  const std::vector<double> ev = nilspec::hermitian_eigenvalues(d);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-14));

  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  CMatrix m(2, 2);
  m.at(0, 0) = Complex(2, 0);
  m.at(0, 1) = Complex(0, 1);
  m.at(1, 0) = Complex(0, -1);
  m.at(1, 1) = Complex(2, 0);
  const std::vector<double> ev2 = nilspec::hermitian_eigenvalues(m);
  CHECK(ev2[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ev2[1] == doctest::Approx(3.0).epsilon(1e-14));

  // Repeated eigenvalues survive as a multiset.
  const std::vector<double> ev3 =
      nilspec::hermitian_eigenvalues(CMatrix::identity(4) * Complex(7, 0));
  for (const double v : ev3) CHECK(v == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("hermitian eigenpairs satisfy residual and invariants") {
  std::mt19937_64 rng(7);
  for (const std::size_t n : {2u, 5u, 8u}) {
    const CMatrix m = random_hermitian(n, rng);
    const nilspec::EigenPairs ep = nilspec::hermitian_eigenpairs(m);
    REQUIRE(ep.values.size() == n);

    // Residual ||M v - lambda v|| per pair.
    for (std::size_t k = 0; k < n; ++k) {
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex mv(0, 0);
        for (std::size_t j = 0; j < n; ++j) mv += m.at(i, j) * ep.vectors.at(j, k);
        mv -= ep.values[k] * ep.vectors.at(i, k);
        res += std::norm(mv);
      }
      CHECK(std::sqrt(res) <= 1e-10 * std::max(1.0, m.frobenius()));
    }

    // Trace and Frobenius invariants.
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i).real();
    double sum = 0.0, sum2 = 0.0;
    for (const double v : ep.values) {
      sum += v;
      sum2 += v * v;
    }
    CHECK(sum == doctest::Approx(tr).epsilon(1e-12));
    CHECK(sum2 == doctest::Approx(m.frobenius() * m.frobenius()).epsilon(1e-12));

    // Ascending order.
    for (std::size_t k = 1; k < n; ++k) CHECK(ep.values[k - 1] <= ep.values[k]);
  }
}

TEST_CASE("non-hermitian input is rejected") {
  CMatrix m(2, 2);
  m.at(0, 1) = Complex(1, 0);
  try {
    nilspec::hermitian_eigenvalues(m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("hermiticity check tolerance") {
  CMatrix m(2, 2);
  m.at(0, 1) = Complex(1, 0);
  m.at(1, 0) = Complex(1, 1e-8);
  CHECK(m.is_hermitian(1e-6));
  CHECK(!m.is_hermitian(1e-10));
  CHECK(CMatrix(3, 3).is_hermitian(0.0));  // zero matrix passes
}

TEST_CASE("shifted integer membership is exact") {
  CHECK(nilspec::in_shifted_integers(Rational(3, 4), Rational(3, 4)));
  CHECK(nilspec::in_shifted_integers(Rational(11, 4), Rational(3, 4)));
  CHECK(nilspec::in_shifted_integers(Rational(-5, 2), Rational(1, 2)));
  CHECK(!nilspec::in_shifted_integers(Rational(1, 2), Rational(1, 4)));
  CHECK(nilspec::in_shifted_integers(Rational(7), Rational(0)));
}
