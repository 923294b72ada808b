// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "nilspec/errors.hpp"

namespace nilspec {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// GMP's string constructors reject a leading '+'.
mpz_class parse_mpz(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
    }
    return Rational(mpq_class(parse_mpz(text)));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  }
  mpz_class d = parse_mpz(den);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator: '" + text + "'");
  }
  return Rational(mpq_class(parse_mpz(num)) / mpq_class(d));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidParameter, "cannot convert non-finite double");
  }
  Rational r{mpq_class(v)};
  return r;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) {
    throw Error(ErrorCode::InvalidParameter, "to_int64 on non-integer rational");
  }
  const mpz_class& n = q_.get_num();
  if (!n.fits_slong_p()) {
    throw Error(ErrorCode::InvalidParameter, "integer too large for int64");
  }
  return static_cast<std::int64_t>(n.get_si());
}

Rational Rational::operator/(const Rational& o) const {
  if (o.q_ == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  }
  return Rational(q_ / o.q_);
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return Rational(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace nilspec
