// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/orbits.hpp"

#include <cmath>

#include "nilspec/cmatrix.hpp"
#include "nilspec/errors.hpp"

namespace nilspec {

namespace {

Rational rceil(const Rational& x) { return -((-x).floor()); }

}  // namespace

Rational CentralOrbit::mu(const Heisenberg3& h) const {
  return Rational(m) + eps_shift(h.spin.eps3);
}

std::vector<ToroidalOrbit> toroidal_orbits(const Heisenberg3& h, double norm_bound,
                                           bool include_boundary, Exec exec) {
  if (!(norm_bound > 0.0) || !std::isfinite(norm_bound)) {
    throw Error(ErrorCode::InvalidParameter, "norm_bound must be positive and finite");
  }
  if (h.spin.eps3 == -1) return {};

  const Rational B = Rational::from_double(norm_bound);
  const Rational B2 = B * B;
  const Rational shift1 = eps_shift(h.spin.eps1);
  const Rational shift2 = eps_shift(h.spin.eps2);
  const Rational w2 = param_dyadic(h.w2);
  const Rational r = param_dyadic(h.r);
  const Rational mv(h.m_v);
  const Rational mw(h.m_w);
  const Rational c1 = w2 / (r * mv);

  // Exact bounding box in j1: |alpha1| <= B.
  const Rational half_width1 = B / c1;
  const std::int64_t j1_lo = rceil(-shift1 - half_width1).to_int64();
  const std::int64_t j1_hi = (-shift1 + half_width1).floor().to_int64();
  if (j1_lo > j1_hi) return {};

  const std::int64_t n1 = j1_hi - j1_lo + 1;
  std::vector<std::vector<ToroidalOrbit>> slots(static_cast<std::size_t>(n1));

  auto process_j1 = [&](std::int64_t off) {
    const std::int64_t j1 = j1_lo + off;
    const Rational t = Rational(j1) + shift1;
    const Rational a1 = c1 * t;
    const Rational a1_sq = a1 * a1;
    if (a1_sq > B2) return;
    // Exact bounding box in j2: |alpha2| <= B.
    const Rational q = (mw / mv) * t;
    const Rational half_width2 = B * w2;
    const std::int64_t j2_lo = rceil(q - shift2 - half_width2).to_int64();
    const std::int64_t j2_hi = (q - shift2 + half_width2).floor().to_int64();
    std::vector<ToroidalOrbit>& out = slots[static_cast<std::size_t>(off)];
    for (std::int64_t j2 = j2_lo; j2 <= j2_hi; ++j2) {
      const Rational a2 = (Rational(j2) + shift2 - q) / w2;
      const Rational s = a1_sq + a2 * a2;
      if (s.sign() == 0) continue;
      if (s < B2 || (include_boundary && s == B2)) {
        out.push_back(ToroidalOrbit{j1, j2, a1, a2});
      }
    }
  };

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 8)
#endif
    for (std::int64_t off = 0; off < n1; ++off) process_j1(off);
  } else {
    for (std::int64_t off = 0; off < n1; ++off) process_j1(off);
  }

  std::vector<ToroidalOrbit> result;
  for (auto& s : slots) {
    result.insert(result.end(), s.begin(), s.end());
  }
  return result;
}

std::vector<CentralOrbit> central_orbits(const Heisenberg3& h, double d_bound) {
  if (!(d_bound > 0.0) || !std::isfinite(d_bound)) {
    throw Error(ErrorCode::InvalidParameter, "d_bound must be positive and finite");
  }
  const Rational shift3 = eps_shift(h.spin.eps3);
  const Rational r = param_dyadic(h.r);
  const Rational half_width = Rational::from_double(d_bound) * r;

  const std::int64_t m_lo = rceil(-shift3 - half_width).to_int64();
  const std::int64_t m_hi = (-shift3 + half_width).floor().to_int64();

  std::vector<CentralOrbit> result;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const Rational mu = Rational(m) + shift3;
    if (mu.sign() == 0) continue;
    const Rational mult = Rational(h.m_v) * mu.abs();
    if (!mult.is_integer()) {
      throw Error(ErrorCode::InvalidParameter, "orbit multiplicity is not an integer");
    }
    result.push_back(CentralOrbit{m, mu / r, mult.to_int64()});
  }
  return result;
}

bool occurrence_check(const std::vector<std::pair<Rational, int>>& values) {
  for (const auto& [x, eps] : values) {
    if (!in_shifted_integers(x, eps_shift(eps))) return false;
  }
  return true;
}

double pesce_laplace_eigenvalue(const std::vector<double>& alpha_Z,
                                const std::vector<std::int64_t>& p,
                                const std::vector<double>& d) {
  if (p.size() != d.size()) {
    throw Error(ErrorCode::DimensionMismatch, "p and d must have equal length");
  }
  const double pi = std::acos(-1.0);
  double s = 0.0;
  for (double a : alpha_Z) s += a * a;
  double value = 4.0 * pi * pi * s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    value += 2.0 * pi * double(2 * p[k] + 1) * d[k];
  }
  return value;
}

}  // namespace nilspec
