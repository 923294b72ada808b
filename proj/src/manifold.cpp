// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/manifold.hpp"

#include <cmath>

#include "nilspec/errors.hpp"

namespace nilspec {

Param Param::from_double(double v) {
  Param p;
  p.exact_ = false;
  p.d_ = v;
  return p;
}

const Rational& Param::rational() const {
  if (!exact_) {
    throw Error(ErrorCode::InvalidParameter, "float-mode parameter has no exact value");
  }
  return q_;
}

Param Param::operator+(const Param& o) const {
  if (exact_ && o.exact_) return Param(q_ + o.q_);
  return from_double(d_ + o.d_);
}

Param Param::operator-(const Param& o) const {
  if (exact_ && o.exact_) return Param(q_ - o.q_);
  return from_double(d_ - o.d_);
}

Param Param::operator*(const Param& o) const {
  if (exact_ && o.exact_) return Param(q_ * o.q_);
  return from_double(d_ * o.d_);
}

Param Param::operator/(const Param& o) const {
  if (exact_ && o.exact_) return Param(q_ / o.q_);
  if (o.d_ == 0.0) {
    throw Error(ErrorCode::DivisionByZero, "parameter division by zero");
  }
  return from_double(d_ / o.d_);
}

Param Param::operator-() const {
  if (exact_) return Param(-q_);
  return from_double(-d_);
}

int Param::sign() const {
  if (exact_) return q_.sign();
  return d_ > 0.0 ? 1 : (d_ < 0.0 ? -1 : 0);
}

Rational eps_shift(int eps) {
  if (eps != 1 && eps != -1) {
    throw Error(ErrorCode::InvalidParameter, "spin sign must be +1 or -1");
  }
  return (Rational(1) - Rational(eps)) / Rational(4);
}

Rational param_dyadic(const Param& p) {
  if (p.exact()) return p.rational();
  return Rational::from_double(p.value());
}

namespace {

void require_sign(int eps, const char* name) {
  if (eps != 1 && eps != -1) {
    throw Error(ErrorCode::InvalidParameter, std::string(name) + " must be +1 or -1");
  }
}

}  // namespace

Heisenberg3 validate(const Heisenberg3& h) {
  if (h.A.sign() <= 0) {
    throw Error(ErrorCode::InvalidParameter, "A must be positive");
  }
  if (h.r.sign() <= 0) {
    throw Error(ErrorCode::InvalidParameter, "r must be positive");
  }
  if (h.w2.sign() <= 0) {
    throw Error(ErrorCode::InvalidParameter, "w2 must be positive");
  }
  if (h.m_v < 1) {
    throw Error(ErrorCode::InvalidParameter, "m_v must be a positive integer");
  }
  require_sign(h.spin.eps1, "eps1");
  require_sign(h.spin.eps2, "eps2");
  require_sign(h.spin.eps3, "eps3");
  if ((h.m_v % 2) != 0 && h.spin.eps3 != 1) {
    throw Error(ErrorCode::OddMvNegEps3, "odd m_v forces eps3 = +1");
  }
  return h;
}

Param volume(const Heisenberg3& h) {
  return h.r * h.r * h.A * Param(h.m_v);
}

Param scalar_curvature(const Heisenberg3& h) {
  return -(Param(1) / (Param(2) * h.A * h.A));
}

Param symmetry_point(const Heisenberg3& h) {
  return -(Param(1) / (Param(4) * h.A));
}

HeisenbergGeneralOrbit validate(const HeisenbergGeneralOrbit& o) {
  if (o.m < 1 || static_cast<int>(o.d.size()) != o.m) {
    throw Error(ErrorCode::InvalidParameter, "orbit needs m >= 1 invariants d_1..d_m");
  }
  double prev = 0.0;
  for (double dj : o.d) {
    if (!(dj > 0.0) || dj < prev) {
      throw Error(ErrorCode::InvalidParameter, "orbit invariants must be positive and nondecreasing");
    }
    prev = dj;
  }
  if (o.multiplicity < 1) {
    throw Error(ErrorCode::InvalidParameter, "orbit multiplicity must be >= 1");
  }
  return o;
}

}  // namespace nilspec
