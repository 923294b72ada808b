// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/pi_bounds.hpp"

#include <cmath>
#include <utility>

namespace nilspec {

namespace {

// First 60 decimal digits of pi after the point; the 61st digit is 5, so
// truncation plus one ulp(10^-60) brackets the true value strictly.
const char kPiDigits[] =
    "3141592653589793238462643383279502884197169399375105820974944";
const char kPiDenom[] =
    "1000000000000000000000000000000000000000000000000000000000000";

Rational make_pi_lo() {
  return Rational::parse(std::string(kPiDigits) + "/" + kPiDenom);
}

Rational make_pi_hi() {
  return make_pi_lo() + Rational::parse(std::string("1/") + kPiDenom);
}

struct Interval {
  Rational lo, hi;
};

Interval scale(const Rational& a, const Interval& x) {
  if (a.sign() >= 0) return {a * x.lo, a * x.hi};
  return {a * x.hi, a * x.lo};
}

Interval add(const Interval& x, const Interval& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

}  // namespace

const Rational& pi_lo() {
  static const Rational v = make_pi_lo();
  return v;
}

const Rational& pi_hi() {
  static const Rational v = make_pi_hi();
  return v;
}

Cmp compare_pi_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() == 0 && b.sign() == 0) {
    int s = (-c).sign();
    if (s < 0) return Cmp::Less;
    if (s > 0) return Cmp::Greater;
    return Cmp::Equal;
  }
  Interval pi{pi_lo(), pi_hi()};
  // pi > 0, so squaring preserves the bracket orientation.
  Interval pi2{pi.lo * pi.lo, pi.hi * pi.hi};
  Interval v = add(scale(a, pi2), scale(b, pi));
  if (v.lo > c) return Cmp::Greater;
  if (v.hi < c) return Cmp::Less;
  return Cmp::Ambiguous;
}

Cmp compare_pi_quadratic_f(double a, double b, double c, double tol) {
  const double pi = std::acos(-1.0);
  double v = a * pi * pi + b * pi - c;
  if (std::fabs(v) <= tol) return Cmp::Ambiguous;
  return v < 0 ? Cmp::Less : Cmp::Greater;
}

}  // namespace nilspec
