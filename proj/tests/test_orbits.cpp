// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"

#include "nilspec/errors.hpp"
#include "nilspec/exec.hpp"
#include "nilspec/manifold.hpp"
#include "nilspec/orbits.hpp"

using nilspec::CentralOrbit;
using nilspec::eps_shift;
using nilspec::Error;
using nilspec::Exec;
using nilspec::Heisenberg3;
using nilspec::Param;
using nilspec::Rational;
using nilspec::ToroidalOrbit;

namespace {

// Independent reference: scan a generous index box and keep points by the
// same exact norm comparison the production enumerator must implement.
std::vector<ToroidalOrbit> box_reference(const Heisenberg3& h, const Rational& bound,
                                         bool include_boundary, std::int64_t box) {
  const Rational w2 = nilspec::param_dyadic(h.w2);
  const Rational r = nilspec::param_dyadic(h.r);
  const Rational s1 = eps_shift(h.spin.eps1);
  const Rational s2 = eps_shift(h.spin.eps2);
  const Rational bound_sq = bound * bound;
  std::vector<ToroidalOrbit> out;
  if (h.spin.eps3 == -1) return out;
  for (std::int64_t j1 = -box; j1 <= box; ++j1) {
    for (std::int64_t j2 = -box; j2 <= box; ++j2) {
      ToroidalOrbit o;
      o.j1 = j1;
      o.j2 = j2;
      const Rational t1 = Rational(j1) + s1;
      const Rational t2 = Rational(j2) + s2;
      o.alpha1 = w2 / (r * Rational(h.m_v)) * t1;
      o.alpha2 = (t2 - Rational(h.m_w, h.m_v) * t1) / w2;
      const Rational n2 = o.norm_sq();
      if (n2.sign() == 0) continue;
      const bool inside = include_boundary ? !(bound_sq < n2) : n2 < bound_sq;
      if (inside) out.push_back(o);
    }
  }
  std::sort(out.begin(), out.end(), [](const ToroidalOrbit& a, const ToroidalOrbit& b) {
    return std::pair(a.j1, a.j2) < std::pair(b.j1, b.j2);
  });
  return out;
}

bool same_orbits(const std::vector<ToroidalOrbit>& a, const std::vector<ToroidalOrbit>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].j1 != b[i].j1 || a[i].j2 != b[i].j2) return false;
    if (!(a[i].alpha1 == b[i].alpha1) || !(a[i].alpha2 == b[i].alpha2)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("character enumeration matches the box reference on the unit lattice") {
  Heisenberg3 h;  // A=r=w2=1, m_v=1, m_w=0, trivial spin
  const auto got = nilspec::toroidal_orbits(h, 2.5, false, Exec::Serial);
  const auto ref = box_reference(h, Rational(5, 2), false, 64);
  CHECK(got.size() == 20);  // norms^2 in {1,2,4,5}: 4+4+4+8 points
  CHECK(same_orbits(got, ref));
}

TEST_CASE("character enumeration matches the box reference with shifts and shear") {
  Heisenberg3 h;
  h.A = Param(Rational(1, 2));
  h.r = Param(2);
  h.w2 = Param(Rational(3, 2));
  h.m_v = 2;
  h.m_w = 1;
  h.spin.eps1 = -1;
  h.spin.eps2 = -1;
  for (const bool boundary : {false, true}) {
    const auto got = nilspec::toroidal_orbits(h, 3.0, boundary, Exec::Serial);
    const auto ref = box_reference(h, Rational(3), boundary, 96);
    CHECK(!got.empty());
    CHECK(same_orbits(got, ref));
  }

  // Every kept point satisfies the lattice pairing conditions.
  const Rational w2 = nilspec::param_dyadic(h.w2);
  const Rational r = nilspec::param_dyadic(h.r);
  for (const auto& o : nilspec::toroidal_orbits(h, 2.0, false, Exec::Serial)) {
    const Rational pair_v = r * Rational(h.m_v) / w2 * o.alpha1;
    const Rational pair_w = r * Rational(h.m_w) / w2 * o.alpha1 + w2 * o.alpha2;
    CHECK(nilspec::occurrence_check(
        {{pair_v, h.spin.eps1}, {pair_w, h.spin.eps2}}));
  }
}

TEST_CASE("no characters occur when the central sign is flipped") {
  Heisenberg3 h;
  h.m_v = 2;
  h.spin.eps3 = -1;
  CHECK(nilspec::toroidal_orbits(h, 10.0, true, Exec::Serial).empty());
}

TEST_CASE("boundary inclusion adds exactly the boundary circle") {
  Heisenberg3 h;
  const auto open = nilspec::toroidal_orbits(h, 1.0, false, Exec::Serial);
  const auto closed = nilspec::toroidal_orbits(h, 1.0, true, Exec::Serial);
  CHECK(open.empty());
  CHECK(closed.size() == 4);  // (+-1, 0), (0, +-1)
  for (const auto& o : closed) CHECK(o.norm_sq() == Rational(1));
}

TEST_CASE("serial and parallel enumeration agree element by element") {
  Heisenberg3 h;
  h.w2 = Param(Rational(4, 3));
  h.m_v = 3;
  h.m_w = -2;
  h.spin.eps2 = -1;
  const auto s = nilspec::toroidal_orbits(h, 25.0, true, Exec::Serial);
  const auto p = nilspec::toroidal_orbits(h, 25.0, true, Exec::Parallel);
  REQUIRE(s.size() == p.size());
  CHECK(same_orbits(s, p));
  CHECK(s.size() > 100);  // enough work to exercise the parallel path
}

TEST_CASE("ladder orbits on the plain integer lattice") {
  Heisenberg3 h;
  h.r = Param(2);
  const auto orbits = nilspec::central_orbits(h, 1.2);
  REQUIRE(orbits.size() == 4);  // d = m/2 with 0 < |d| <= 1.2: m in {-2,-1,1,2}
  CHECK(orbits[0].m == -2);
  CHECK(orbits[0].d == Rational(-1));
  CHECK(orbits[0].multiplicity == 2);
  CHECK(orbits[1].m == -1);
  CHECK(orbits[1].d == Rational(-1, 2));
  CHECK(orbits[1].multiplicity == 1);
  CHECK(orbits[2].m == 1);
  CHECK(orbits[2].d == Rational(1, 2));
  CHECK(orbits[3].m == 2);
  CHECK(orbits[3].d == Rational(1));
  CHECK(orbits[3].mu(h) == Rational(2));
}

TEST_CASE("ladder orbits on the half-shifted lattice") {
  Heisenberg3 h;
  h.m_v = 2;
  h.spin.eps3 = -1;  // mu = m + 1/2
  const auto orbits = nilspec::central_orbits(h, 1.6);
  REQUIRE(orbits.size() == 4);  // mu in {-3/2, -1/2, 1/2, 3/2}
  CHECK(orbits[0].m == -2);
  CHECK(orbits[0].d == Rational(-3, 2));
  CHECK(orbits[0].multiplicity == 3);  // m_v |mu| = 2 * 3/2
  CHECK(orbits[1].m == -1);
  CHECK(orbits[1].d == Rational(-1, 2));
  CHECK(orbits[1].multiplicity == 1);
  CHECK(orbits[2].d == Rational(1, 2));
  CHECK(orbits[3].d == Rational(3, 2));
  CHECK(orbits[3].multiplicity == 3);
  // No mu = 0 orbit can exist on this lattice at all.
  for (const auto& o : orbits) CHECK(o.mu(h).sign() != 0);
}

TEST_CASE("coset membership test") {
  CHECK(nilspec::occurrence_check({{Rational(3), 1}}));
  CHECK(nilspec::occurrence_check({{Rational(5, 2), -1}}));
  CHECK(!nilspec::occurrence_check({{Rational(5, 2), 1}}));
  CHECK(!nilspec::occurrence_check({{Rational(1, 3), -1}}));
  CHECK(nilspec::occurrence_check({{Rational(-2), 1}, {Rational(-7, 2), -1}}));
  CHECK(!nilspec::occurrence_check({{Rational(-2), 1}, {Rational(-7, 2), 1}}));
  CHECK(nilspec::occurrence_check({}));
}

TEST_CASE("laplace eigenvalue of a representation") {
  const double pi = std::acos(-1.0);
  const double got = nilspec::pesce_laplace_eigenvalue({0.5}, {2}, {3.0});
  CHECK(got == doctest::Approx(pi * pi + 30.0 * pi).epsilon(1e-14));
  // Characters: no ladder term.
  const double flat = nilspec::pesce_laplace_eigenvalue({1.0, -2.0}, {}, {});
  CHECK(flat == doctest::Approx(4.0 * pi * pi * 5.0).epsilon(1e-14));
  CHECK_THROWS_AS(nilspec::pesce_laplace_eigenvalue({0.0}, {1, 2}, {1.0}), Error);
}
