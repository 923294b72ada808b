// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_SPECTRUM_HPP
#define NILSPEC_SPECTRUM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilspec/clifford.hpp"
#include "nilspec/cmatrix.hpp"
#include "nilspec/exec.hpp"
#include "nilspec/manifold.hpp"
#include "nilspec/orbits.hpp"

namespace nilspec {

// Identifies the orbit a spectrum slice came from.  Lattice-derived slices
// carry exact rational descriptors (alpha1/alpha2 or mu) so downstream
// eigenvalue-membership tests can run without floating error; raw slices
// built from plain doubles set exact = false.
struct OrbitKey {
  enum class Family { AlphaZero, Toroidal, Central };

  Family family = Family::Central;
  bool exact = false;
  std::int64_t j1 = 0;  // toroidal lattice index
  std::int64_t j2 = 0;
  Rational alpha1;      // toroidal, exact mode
  Rational alpha2;
  std::int64_t m = 0;   // central lattice index
  Rational mu;          // central, exact mode (mu = r d)
  double d = 0.0;       // central parameter as a double
  std::int64_t multiplicity = 1;

  std::string label() const;
};

// One eigenvalue with its multiplicity plus enough provenance (ladder index
// p and closed-form branch -1/0/+1) to re-derive it exactly from the key.
struct EigEntry {
  double value = 0.0;
  std::int64_t multiplicity = 1;
  std::int64_t p = 0;
  int branch = 0;
};

// Eigenvalues contributed by one orbit, restricted to a window.  The
// complete flag is set only when the generator proves that no eigenvalue
// of this orbit inside the window was omitted.
struct SpectrumSlice {
  OrbitKey origin;
  std::vector<EigEntry> eigenvalues;  // ascending by value
  double window_lo = 0.0;
  double window_hi = 0.0;
  bool window_bounded = false;
  bool complete = false;
};

// Basis label for the ladder decomposition in general dimension.
struct HermiteBasisIndex {
  std::vector<std::int64_t> p;  // m nonnegative ladder indices
  std::vector<int> ell;         // n' signs in {+1, -1}
};

// Character eigenvalues -1/(4A) -+ 2 pi sqrt((a1^2 + a2^2)/A), returned
// (minus branch, plus branch).  Both offsets come from one square root so
// the pair is exactly mirrored about -1/(4A).
std::pair<double, double> toroidal_spectrum_3d(double alpha1, double alpha2, double A);

// Eigenvalues of the infinite-dimensional orbit with central parameter
// d != 0: the single ladder-bottom value -1/(4A) - 2 pi d at p = 0, and
// -1/(4A) -+ 2 sqrt(pi |d| p / A + pi^2 d^2) for 1 <= p <= p_max.  Each
// entry has multiplicity 1; orbit multiplicity is the caller's business.
SpectrumSlice central_spectrum_3d(double d, double A, std::int64_t p_max);

// Matrix of the operator on the 2^m-dimensional ladder block U_p.
// Off-diagonal entries -2i sqrt(pi d_j p_j) l_1...l_j link l to l with
// slot j flipped; the diagonal is
//   -2 pi alpha(Z) l_1...l_m - (1/4) sum_j (d_j / |alpha(Z)|) l_1...l_m/l_j.
// The d_j / |alpha(Z)| ratio is the structure constant of the frame, which
// the orbit invariants absorb only when |alpha(Z)| = 1; keeping the ratio
// makes the m = 1 case reproduce the three-dimensional closed forms for
// every d (see the unit oracle tests).
CMatrix block_matrix_general(const HeisenbergGeneralOrbit& orbit,
                             const std::vector<std::int64_t>& p,
                             const CliffordGen& gens);

// Constant matrix of the operator on a character subspace in dimension
// 2m + 1: 2 pi i alpha(A1) (U_1) + (1/4) sum_j a_j (W_1 U_j V_j), built for
// generators with k_alpha = 1.  For m = 1 its eigenvalues are
// -a_1/4 -+ 2 pi alpha(A1).
CMatrix toroidal_matrix_general(int m, const std::vector<double>& a,
                                double alpha_A1, const CliffordGen& gens);

// Hermite function h_p(t) = e^(t^2/2) (d/dt)^p e^(-t^2) via the three-term
// recurrence h_{p+2} = -2 t h_{p+1} - 2 (p+1) h_p.
double hermite(std::int64_t p, double t);

// Every eigenvalue in [lambda_bar - W, lambda_bar + W] of a validated
// three-dimensional manifold, as one slice per occurring orbit plus the
// two-dimensional alpha = 0 slice when the spin structure is trivial.
// Enumeration bounds are derived from W (see the source for the algebra)
// and padded upward, never down, so no in-window eigenvalue is missed;
// p_cap is a hard safety cap on ladder depth.
std::vector<SpectrumSlice> assemble_spectrum(const Heisenberg3& h,
                                             double window_halfwidth,
                                             std::int64_t p_cap,
                                             Exec exec = Exec::Parallel);

// Flattened (value, multiplicity) pairs of several slices, ascending.
std::vector<std::pair<double, std::int64_t>> flatten_spectrum(
    const std::vector<SpectrumSlice>& slices);

// True iff the flattened multiset is invariant under reflection about
// center, matching mirrored offsets within pair_tol.
bool spectrum_symmetric_about(const std::vector<SpectrumSlice>& slices,
                              double center, double pair_tol);

// The four eigenvalues of the finite five-dimensional example block:
//   1/4 +- (1/4) sqrt(64 pi^2 aX^2 + 16 pi aX + 64 pi^2 (aY1^2 + aY2^2) + 1)
//  -1/4 +- (1/4) sqrt(64 pi^2 aX^2 - 16 pi aX + 64 pi^2 (aY1^2 + aY2^2) + 1)
// in the order (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> five_dim_finite_eigenvalues(double aX, double aY1, double aY2);

// The 4x4 block the closed forms above diagonalize; kept as an
// independent oracle for them.
CMatrix five_dim_finite_matrix(double aX, double aY1, double aY2);

// A coupling from the last retained ladder level to the dropped one.
struct DroppedCoupling {
  std::int64_t p = 0;  // source ladder index (= p_max)
  int ell1 = 1;
  int ell2 = 1;
  double magnitude = 0.0;
};

struct FiveDimBand {
  CMatrix matrix;
  std::vector<DroppedCoupling> dropped;
};

// Truncation of the five-dimensional band operator to ladder levels
// p <= p_max over the two-sign basis, size 4 (p_max + 1); d = sqrt(g1^2 +
// g2^2) must be positive.  Within a level: flipping slot 1 couples with
// -2i sqrt(pi d p) l_1, flipping slot 2 with -1/4 - 2 pi d l_1, and the
// diagonal is -2 pi (g1 b2 / d) l_1 l_2.  Between levels, (p, l) couples
// to (p + l_1, -l) with entry exactly 1/4 in the normalized basis (the
// raw ladder coefficients scale as the basis norms sqrt(2^p p!), and the
// ratio cancels to 1/4 in both directions).  Couplings that would leave
// the truncation are returned in the report instead.
FiveDimBand five_dim_band_matrix(double b2, double g1, double g2, std::int64_t p_max);

}  // namespace nilspec

#endif  // NILSPEC_SPECTRUM_HPP
