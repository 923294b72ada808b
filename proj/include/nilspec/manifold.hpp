// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_MANIFOLD_HPP
#define NILSPEC_MANIFOLD_HPP

#include <cstdint>
#include <vector>

#include "nilspec/rational.hpp"

namespace nilspec {

// Metric or lattice parameter: an exact rational in the default mode, a
// plain double when the caller opted into float mode (needed for families
// whose parameters involve square roots).  Arithmetic stays exact as long
// as every operand is exact.
class Param {
 public:
  Param() : exact_(true), q_(0), d_(0.0) {}
  Param(const Rational& q) : exact_(true), q_(q), d_(q.to_double()) {}  // NOLINT
  Param(std::int64_t n) : Param(Rational(n)) {}                         // NOLINT

  static Param from_double(double v);

  bool exact() const { return exact_; }
  // Exact value; only valid when exact() is true.
  const Rational& rational() const;
  double value() const { return d_; }

  Param operator+(const Param& o) const;
  Param operator-(const Param& o) const;
  Param operator*(const Param& o) const;
  Param operator/(const Param& o) const;
  Param operator-() const;

  int sign() const;

 private:
  bool exact_;
  Rational q_;
  double d_;
};

// The three signs classifying a spin structure on the lattice generators.
struct SpinStructure {
  int eps1 = 1;
  int eps2 = 1;
  int eps3 = 1;

  bool is_trivial() const { return eps1 == 1 && eps2 == 1 && eps3 == 1; }
};

// (1 - eps)/4: the coset shift that a sign contributes to occurrence
// conditions; 0 for eps = +1 and 1/2 for eps = -1.  Any other argument
// throws Error(InvalidParameter).
Rational eps_shift(int eps);

// Exact rational view of a parameter: the stored rational when exact, the
// exact dyadic value of the stored double otherwise.
Rational param_dyadic(const Param& p);

// A three-dimensional Heisenberg manifold in lattice normal form: metric
// parameter A, central period r, lattice vectors v = (r m_v / w2, 0) and
// w = (r m_w / w2, w2), plus a spin structure.
struct Heisenberg3 {
  Param A = Param(1);
  Param r = Param(1);
  Param w2 = Param(1);
  std::int64_t m_v = 1;
  std::int64_t m_w = 0;
  SpinStructure spin;

  bool float_mode() const {
    return !A.exact() || !r.exact() || !w2.exact();
  }
};

// Checks every invariant and returns h unchanged; throws
// Error(InvalidParameter) naming the violated condition, or
// Error(OddMvNegEps3) for the spin constraint tying odd m_v to eps3 = +1.
Heisenberg3 validate(const Heisenberg3& h);

// r^2 A m_v; exact when the parameters are exact.
Param volume(const Heisenberg3& h);

// -1/(2 A^2); exact when A is exact.
Param scalar_curvature(const Heisenberg3& h);

// The spectrum is symmetric about -1/(4A); exact when A is exact.
Param symmetry_point(const Heisenberg3& h);

// Data of a single coadjoint orbit in general odd dimension n = 2m + 1:
// the invariants d_1 <= ... <= d_m of the skew form restricted to the
// orbit, the central value alpha(Z), and the lattice multiplicity.
struct HeisenbergGeneralOrbit {
  int m = 1;
  std::vector<double> d;
  double alpha_Z = 0.0;
  std::int64_t multiplicity = 1;
};

// Invariant check for orbit data; throws Error(InvalidParameter).
HeisenbergGeneralOrbit validate(const HeisenbergGeneralOrbit& o);

}  // namespace nilspec

#endif  // NILSPEC_MANIFOLD_HPP
