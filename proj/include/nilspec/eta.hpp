// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_ETA_HPP
#define NILSPEC_ETA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nilspec/exec.hpp"
#include "nilspec/manifold.hpp"

namespace nilspec {

// Heat kernel coefficients of the three-dimensional operator: a00 = 2 vol,
// a10 = r^2 m_v / (12 A), a11 = 0, a12 = 4 vol.
struct HeatCoeffs3 {
  double a00 = 0.0;
  double a10 = 0.0;
  double a11 = 0.0;
  double a12 = 0.0;
};

// The nonnegative-integer correction N, split into the terms that build it.
// Each term is already scaled the way it enters N, so N is the plain sum.
struct EtaBreakdown {
  std::int64_t toroidal_strict = 0;   // 2 x characters strictly inside the disk
  std::int64_t toroidal_boundary = 0; // characters exactly on the disk boundary
  std::int64_t central_mu_sum = 0;    // 2 m_v sum |mu| over the ladder-bottom window
  std::int64_t p_sum = 0;             // 2 m_v sum |mu| over the p >= 1 windows
  std::int64_t boundary_zero = 0;     // zero-eigenvalue multiplicities, ladder families
  std::int64_t alpha0 = 0;            // 2 iff the spin structure is trivial

  std::int64_t total() const {
    return toroidal_strict + toroidal_boundary + central_mu_sum + p_sum +
           boundary_zero + alpha0;
  }
};

// Result of an eta evaluation.  In float mode a membership test can land
// within tolerance of a window boundary; the count is then unusable and
// indeterminate is set (eta0 = closed form - N holds only when it is not).
struct EtaReport {
  double eta0 = 0.0;
  std::int64_t N = 0;
  double lambda_bar = 0.0;
  EtaBreakdown breakdown;
  bool indeterminate = false;
};

HeatCoeffs3 heat_coeffs_3d(const Heisenberg3& h);

// The degree-1 coefficient list (a10, a11, a12) in the shape
// eta_symmetric_general and a_j_of_c expect.
std::vector<double> heat_coeff_list(const HeatCoeffs3& c);

// sum_k c^k a_k over the given coefficients.
double a_j_of_c(const std::vector<double>& coeffs, double c);

// d(eta_c(0))/dc = -2^(1-n) pi^(-(n+1)/2) a_(n-1)/2(c) for odd n; for even
// n the eta invariant is locally constant in c, so the derivative is an
// exact 0 carried with a flag.
struct DetaResult {
  double value = 0.0;
  bool even_dimension = false;
};
DetaResult deta_dc(int n, double a_half);

// Eta invariant of an operator whose spectrum is symmetric about
// lambda_bar except for finitely many eigenvalues in the open interval
// (lambda_bar, 0) (count_open, with multiplicity) and on {0, lambda_bar}
// (count_closed):
//   -2^(1-n) pi^(-(n+1)/2) sum_{k=0}^{n-1} ((-1)^k/(k+1)) lambda_bar^(k+1) a_k
//     + sgn(lambda_bar) (2 count_open + count_closed).
// sgn(0) is taken as 0 and flagged degenerate rather than guessing a side.
struct EtaGeneralResult {
  double value = 0.0;
  bool degenerate = false;
};
EtaGeneralResult eta_symmetric_general(int n, double lambda_bar,
                                       const std::vector<double>& a_k,
                                       std::int64_t count_open,
                                       std::int64_t count_closed);

// The integer correction N with its full breakdown (eta0 left at 0).
// Exact-rational manifolds are decided with exact window membership;
// float-mode manifolds use tolerance tests and set indeterminate when a
// membership lands within tolerance of a boundary.
EtaReport count_N(const Heisenberg3& h);

// eta(0) = r^2 m_v / (96 pi^2 A^2) - N, with the count_N breakdown attached.
EtaReport eta_3d(const Heisenberg3& h);

// Brute-force oracle: enumerates every eigenvalue in [lambda_bar, 0] via
// assemble_spectrum and counts the open interval (lambda_bar, 0) and the
// two-point set {0, lambda_bar} with multiplicities, classifying each
// eigenvalue through its exact orbit descriptor.  Independent of count_N's
// closed-form bookkeeping.
struct SpectralCounts {
  std::int64_t open = 0;
  std::int64_t closed = 0;
  bool indeterminate = false;
};
SpectralCounts spectral_counts(const Heisenberg3& h);

// Finite-sum check of the derivative identity
//   d/dc eta_c(s) = -s zeta_{(D+c)^2}((s+1)/2)
// on a truncated spectrum of (eigenvalue, multiplicity) pairs: returns
//   |[eta_{c+dc}(s) - eta_{c-dc}(s)]/(2 dc) + s zeta((s+1)/2)| / |s zeta|.
// Throws Error(TailTooLarge) when the truncation radius cannot bound the
// tail below 1e-8 of the partial sums, and Error(InvalidParameter) when c
// or c +- dc collides with an eigenvalue negative.
double eta_zeta_identity_check(const std::vector<std::pair<double, std::int64_t>>& spectrum,
                               double c, double s, double dc);

// Eta reports for the family A = b1 r, w2 = b2 sqrt(r) over the given r
// values (float mode; sqrt(r) is generally irrational).  Output order
// matches r_values regardless of execution policy.
std::vector<EtaReport> constant_eta_family(double b1, double b2, std::int64_t m_v,
                                           std::int64_t m_w, const SpinStructure& spin,
                                           const std::vector<double>& r_values,
                                           Exec exec = Exec::Parallel);

}  // namespace nilspec

#endif  // NILSPEC_ETA_HPP
