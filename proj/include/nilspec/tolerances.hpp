// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_TOLERANCES_HPP
#define NILSPEC_TOLERANCES_HPP

namespace nilspec {

// Every floating-point tolerance used by the library, in one place.
// Values are part of the tested contract; changing one is an interface change.
struct Tolerances {
  // Hermitian acceptance: max|M - M*| <= hermitian_check * max|M|.
  double hermitian_check = 1e-12;
  // Jacobi sweep stop: off-diagonal Frobenius norm <= jacobi_off * ||M||.
  double jacobi_off = 1e-14;
  // Cap on Jacobi sweeps before NoConvergence.
  int jacobi_max_sweeps = 100;
  // Eigenpair residual bound ||Mv - lambda v|| <= eig_residual * ||M||.
  double eig_residual = 1e-10;
  // Float-mode membership tests: |x - nearest| <= float_membership is
  // ambiguous rather than a definite yes/no.
  double float_membership = 1e-9;
  // Matching mirrored eigenvalues when checking spectral symmetry.
  double symmetry_pair = 1e-12;
  // Relative tail bound required of truncated eta/zeta partial sums.
  double zeta_tail = 1e-8;
};

inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace nilspec

#endif  // NILSPEC_TOLERANCES_HPP
