// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_ORBITS_HPP
#define NILSPEC_ORBITS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nilspec/exec.hpp"
#include "nilspec/manifold.hpp"
#include "nilspec/rational.hpp"

namespace nilspec {

// A character orbit: the representation is one-dimensional, indexed by a
// lattice point (j1, j2) with
//   alpha1 = (w2/(r m_v)) (j1 + (1-eps1)/4)
//   alpha2 = (1/w2) [(j2 + (1-eps2)/4) - (m_w/m_v)(j1 + (1-eps1)/4)].
// Multiplicity is identically 1.
struct ToroidalOrbit {
  std::int64_t j1 = 0;
  std::int64_t j2 = 0;
  Rational alpha1;
  Rational alpha2;

  Rational norm_sq() const { return alpha1 * alpha1 + alpha2 * alpha2; }
};

// An infinite-dimensional orbit with central parameter d = mu / r where
// mu = m + (1-eps3)/4 is nonzero; it occurs with multiplicity
// m_v |mu| = m_v r |d|, always a positive integer for valid spin data.
struct CentralOrbit {
  std::int64_t m = 0;
  Rational d;
  std::int64_t multiplicity = 1;

  Rational mu(const Heisenberg3& h) const;
};

// All (j1, j2) with 0 < ||alpha|| < norm_bound, or <= norm_bound when
// include_boundary is set.  Empty whenever eps3 = -1.  The bound is taken
// exactly as the dyadic rational the double represents; enumeration walks
// an exact bounding box and keeps points by exact squared-norm comparison,
// so no lattice point in the disk is missed.  Output is sorted by (j1, j2)
// for both execution policies.
std::vector<ToroidalOrbit> toroidal_orbits(const Heisenberg3& h, double norm_bound,
                                           bool include_boundary,
                                           Exec exec = Exec::Parallel);

// All m in Z with 0 < |d| <= d_bound, d = (m + (1-eps3)/4)/r, sorted by m.
std::vector<CentralOrbit> central_orbits(const Heisenberg3& h, double d_bound);

// True iff every pair (x, eps) satisfies x in Z + (1-eps)/4.
bool occurrence_check(const std::vector<std::pair<Rational, int>>& values);

// Laplace eigenvalue of the representation with central values alpha_Z,
// ladder indices p, and invariants d:
//   4 pi^2 sum alpha_Z_i^2 + 2 pi sum (2 p_k + 1) d_k.
double pesce_laplace_eigenvalue(const std::vector<double>& alpha_Z,
                                const std::vector<std::int64_t>& p,
                                const std::vector<double>& d);

}  // namespace nilspec

#endif  // NILSPEC_ORBITS_HPP
