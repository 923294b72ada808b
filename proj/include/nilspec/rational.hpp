// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_RATIONAL_HPP
#define NILSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nilspec {

// Arbitrary-precision rational number, always held in canonical form
// (reduced, positive denominator).  Thin wrapper over GMP's mpq_class;
// the wrapper pins the canonicalization and error contract the rest of
// the library depends on.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den);

  // Parses "p", "-p", "p/q".  Throws Error(ParseError) on malformed input
  // and Error(DivisionByZero) on a zero denominator.
  static Rational parse(const std::string& text);

  // Exact conversion: every finite double is a dyadic rational.
  // Throws Error(InvalidParameter) for NaN or infinity.
  static Rational from_double(double v);

  Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
  Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
  Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(::abs(q_)); }

  // Largest integer <= *this, as a Rational.
  Rational floor() const;

  // True iff the denominator is 1.
  bool is_integer() const { return q_.get_den() == 1; }

  // Nearest double (GMP rounds correctly for values in range).
  double to_double() const { return q_.get_d(); }

  // Exact integer value; requires is_integer() and a value that fits.
  // Throws Error(InvalidParameter) otherwise.
  std::int64_t to_int64() const;

  // Canonical "p/q" or "p" when q == 1.
  std::string str() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nilspec

#endif  // NILSPEC_RATIONAL_HPP
