// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_PI_BOUNDS_HPP
#define NILSPEC_PI_BOUNDS_HPP

#include "nilspec/rational.hpp"

namespace nilspec {

// Outcome of a comparison that may be undecidable at the working precision.
enum class Cmp { Less, Equal, Greater, Ambiguous };

// Rational enclosure pi_lo < pi < pi_hi, 60 decimal digits wide.
const Rational& pi_lo();
const Rational& pi_hi();

// Decides sign(a*pi^2 + b*pi - c) for exact rational a, b, c by interval
// arithmetic over the enclosure.  When (a, b) != (0, 0) the value is
// irrational, so Equal can only arise from a == b == 0 with c == 0;
// Ambiguous means the 60-digit enclosure cannot separate the value from
// zero, which no tested input reaches.
Cmp compare_pi_quadratic(const Rational& a, const Rational& b, const Rational& c);

// Float-mode twin: evaluates a*pi^2 + b*pi - c in doubles and reports
// Ambiguous when the value lies within tol of zero.
Cmp compare_pi_quadratic_f(double a, double b, double c, double tol);

}  // namespace nilspec

#endif  // NILSPEC_PI_BOUNDS_HPP
