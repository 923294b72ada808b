// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include <limits>
#include <optional>

#include "doctest.h"

#include "nilspec/errors.hpp"
#include "nilspec/rational.hpp"

using nilspec::Error;
using nilspec::ErrorCode;
using nilspec::Rational;

namespace {

template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("4/6") == Rational(2, 3));  // canonical form
  CHECK(Rational::parse("-4/-6") == Rational(2, 3));

  CHECK(thrown_code([] { Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(thrown_code([] { Rational::parse("abc"); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { Rational::parse("1.5"); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { Rational::parse(""); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { Rational::parse("1/2/3"); }) == ErrorCode::ParseError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1) - Rational(5, 2) == Rational(-3, 2));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK(-Rational(3, 4) == Rational(-3, 4));

  Rational acc(1, 4);
  acc += Rational(1, 4);
  CHECK(acc == Rational(1, 2));

  CHECK(thrown_code([] { return Rational(1) / Rational(0); }) ==
        ErrorCode::DivisionByZero);
  CHECK(thrown_code([] { Rational(1, 0); }) == ErrorCode::DivisionByZero);

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 10) == Rational(1, 2));
}

TEST_CASE("rational queries") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(6, 3).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(6, 3).to_int64() == 2);
  CHECK(thrown_code([] { Rational(1, 2).to_int64(); }).has_value());
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rational from_double is exact") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(-0.375) == Rational(-3, 8));
  // 0.1 is not 1/10 in binary64; the conversion must reproduce the double.
  const Rational q = Rational::from_double(0.1);
  CHECK(q != Rational(1, 10));
  CHECK(q.to_double() == 0.1);
  CHECK(thrown_code([] {
          Rational::from_double(std::numeric_limits<double>::infinity());
        }) == ErrorCode::InvalidParameter);
}

TEST_CASE("rational string round trip") {
  for (const Rational q : {Rational(3, 2), Rational(-11, 7), Rational(0),
                           Rational(42), Rational(-1, 1000000)}) {
    CHECK(Rational::parse(q.str()) == q);
  }
}
