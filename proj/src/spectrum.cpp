// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nilspec/errors.hpp"
#include "nilspec/tolerances.hpp"

namespace nilspec {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Relative padding applied to enumeration bounds derived from the window:
// overshooting only ever adds candidates that the per-value check rejects.
constexpr double kBoundPad = 1e-9;

}  // namespace

std::string OrbitKey::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::AlphaZero:
      os << "alpha0";
      break;
    case Family::Toroidal:
      os << "tor(j1=" << j1 << ",j2=" << j2 << ")";
      break;
    case Family::Central:
      if (exact) {
        os << "cen(m=" << m << ",mu=" << mu.str() << ")";
      } else {
        os << "cen(d=" << d << ")";
      }
      break;
  }
  return os.str();
}

std::pair<double, double> toroidal_spectrum_3d(double alpha1, double alpha2, double A) {
  if (!(A > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "A must be positive");
  }
  const double lambda_bar = -1.0 / (4.0 * A);
  const double off = 2.0 * kPi * std::sqrt((alpha1 * alpha1 + alpha2 * alpha2) / A);
  return {lambda_bar - off, lambda_bar + off};
}

SpectrumSlice central_spectrum_3d(double d, double A, std::int64_t p_max) {
  if (!(A > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "A must be positive");
  }
  if (d == 0.0) {
    throw Error(ErrorCode::InvalidParameter, "central parameter d must be nonzero");
  }
  if (p_max < 0) {
    throw Error(ErrorCode::InvalidParameter, "p_max must be nonnegative");
  }
  const double lambda_bar = -1.0 / (4.0 * A);
  SpectrumSlice slice;
  slice.origin.family = OrbitKey::Family::Central;
  slice.origin.exact = false;
  slice.origin.d = d;
  slice.origin.multiplicity = 1;
  slice.eigenvalues.push_back(EigEntry{lambda_bar - 2.0 * kPi * d, 1, 0, 0});
  for (std::int64_t p = 1; p <= p_max; ++p) {
    const double off =
        2.0 * std::sqrt(kPi * std::fabs(d) * double(p) / A + kPi * kPi * d * d);
    slice.eigenvalues.push_back(EigEntry{lambda_bar - off, 1, p, -1});
    slice.eigenvalues.push_back(EigEntry{lambda_bar + off, 1, p, +1});
  }
  std::sort(slice.eigenvalues.begin(), slice.eigenvalues.end(),
            [](const EigEntry& a, const EigEntry& b) { return a.value < b.value; });
  return slice;
}

CMatrix block_matrix_general(const HeisenbergGeneralOrbit& orbit,
                             const std::vector<std::int64_t>& p,
                             const CliffordGen& gens) {
  validate(orbit);
  const int m = orbit.m;
  if (static_cast<int>(p.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch, "need one ladder index per invariant");
  }
  if (gens.n_prime() != m) {
    throw Error(ErrorCode::DimensionMismatch, "generators sized for a different block");
  }
  for (std::int64_t pj : p) {
    if (pj < 0) {
      throw Error(ErrorCode::InvalidParameter, "ladder indices must be nonnegative");
    }
  }
  const double az = orbit.alpha_Z;
  if (az == 0.0) {
    throw Error(ErrorCode::InvalidParameter, "block matrix needs alpha(Z) != 0");
  }

  const std::size_t dim = std::size_t(1) << m;
  CMatrix M(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::vector<int> ell = index_to_ell(i, m);
    double prod_all = 1.0;
    for (int l : ell) prod_all *= double(l);

    double diag = -2.0 * kPi * az * prod_all;
    for (int j = 1; j <= m; ++j) {
      diag -= 0.25 * (orbit.d[j - 1] / std::fabs(az)) * (prod_all / double(ell[j - 1]));
    }
    M.at(i, i) = Complex(diag, 0.0);

    double prefix = 1.0;
    for (int j = 1; j <= m; ++j) {
      prefix *= double(ell[j - 1]);
      if (p[j - 1] == 0) continue;
      const double mag = 2.0 * std::sqrt(kPi * orbit.d[j - 1] * double(p[j - 1]));
      const std::size_t target = i ^ (std::size_t(1) << (m - j));
      M.at(target, i) = Complex(0.0, -mag * prefix);
    }
  }
  if (!M.is_hermitian(tol().hermitian_check)) {
    throw Error(ErrorCode::NotHermitian, "ladder block failed the Hermitian check");
  }
  return M;
}

CMatrix toroidal_matrix_general(int m, const std::vector<double>& a,
                                double alpha_A1, const CliffordGen& gens) {
  if (m < 1 || static_cast<int>(a.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch, "need one bracket constant per pair");
  }
  if (gens.m != m || gens.k_alpha != 1) {
    throw Error(ErrorCode::DimensionMismatch, "generators must be built for (m, 1)");
  }
  CMatrix M = gens.u(1).to_cmatrix(Complex(0.0, 2.0 * kPi * alpha_A1));
  for (int j = 1; j <= m; ++j) {
    const GMatrix zab = gens.w(1) * gens.u(j) * gens.v(j);
    M = M + zab.to_cmatrix(Complex(0.25 * a[j - 1], 0.0));
  }
  return M;
}

double hermite(std::int64_t p, double t) {
  if (p < 0) {
    throw Error(ErrorCode::InvalidParameter, "hermite order must be nonnegative");
  }
  const double h0 = std::exp(-0.5 * t * t);
  if (p == 0) return h0;
  double prev = h0;
  double cur = -2.0 * t * h0;
  for (std::int64_t k = 0; k + 1 < p; ++k) {
    const double next = -2.0 * t * cur - 2.0 * double(k + 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

SpectrumSlice toroidal_slice(const ToroidalOrbit& t, double A, double lambda_bar,
                             double lo, double hi) {
  SpectrumSlice s;
  s.origin.family = OrbitKey::Family::Toroidal;
  s.origin.exact = true;
  s.origin.j1 = t.j1;
  s.origin.j2 = t.j2;
  s.origin.alpha1 = t.alpha1;
  s.origin.alpha2 = t.alpha2;
  s.origin.multiplicity = 1;
  s.window_lo = lo;
  s.window_hi = hi;
  s.window_bounded = true;
  s.complete = true;
  const double S = t.norm_sq().to_double();
  // One square root feeds both branches, so the pair mirrors exactly.
  const double off = 2.0 * kPi * std::sqrt(S / A);
  if (lambda_bar - off >= lo) {
    s.eigenvalues.push_back(EigEntry{lambda_bar - off, 1, 0, -1});
  }
  if (lambda_bar + off <= hi) {
    s.eigenvalues.push_back(EigEntry{lambda_bar + off, 1, 0, +1});
  }
  return s;
}

SpectrumSlice central_slice(const CentralOrbit& c, const Heisenberg3& h, double A,
                            double lambda_bar, double W, double lo, double hi,
                            std::int64_t p_cap) {
  SpectrumSlice s;
  s.origin.family = OrbitKey::Family::Central;
  s.origin.exact = true;
  s.origin.m = c.m;
  s.origin.mu = c.mu(h);
  s.origin.d = c.d.to_double();
  s.origin.multiplicity = c.multiplicity;
  s.window_lo = lo;
  s.window_hi = hi;
  s.window_bounded = true;
  const double d = s.origin.d;
  const double ad = std::fabs(d);

  const double v0 = lambda_bar - 2.0 * kPi * d;
  if (v0 >= lo && v0 <= hi) {
    s.eigenvalues.push_back(EigEntry{v0, c.multiplicity, 0, 0});
  }
  // Offsets grow monotonically in p; once one exceeds the halfwidth all
  // later ones do too, so the loop proves completeness unless p_cap stops
  // it first.
  s.complete = true;
  for (std::int64_t p = 1;; ++p) {
    const double off = 2.0 * std::sqrt(kPi * ad * double(p) / A + kPi * kPi * d * d);
    if (off > W * (1.0 + kBoundPad)) break;
    if (p > p_cap) {
      s.complete = false;
      break;
    }
    if (lambda_bar - off >= lo) {
      s.eigenvalues.push_back(EigEntry{lambda_bar - off, c.multiplicity, p, -1});
    }
    if (lambda_bar + off <= hi) {
      s.eigenvalues.push_back(EigEntry{lambda_bar + off, c.multiplicity, p, +1});
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const EigEntry& a, const EigEntry& b) { return a.value < b.value; });
  return s;
}

}  // namespace

std::vector<SpectrumSlice> assemble_spectrum(const Heisenberg3& h,
                                             double window_halfwidth,
                                             std::int64_t p_cap, Exec exec) {
  validate(h);
  if (!(window_halfwidth > 0.0) || !std::isfinite(window_halfwidth)) {
    throw Error(ErrorCode::InvalidParameter, "window halfwidth must be positive");
  }
  if (p_cap < 1) {
    throw Error(ErrorCode::InvalidParameter, "p_cap must be positive");
  }
  const double A = h.A.value();
  const double W = window_halfwidth;
  const double lambda_bar = symmetry_point(h).value();
  const double lo = lambda_bar - W;
  const double hi = lambda_bar + W;

  std::vector<SpectrumSlice> slices;

  // The two-dimensional alpha = 0 eigenspace at the symmetry point exists
  // exactly when all three spin signs are trivial.
  if (h.spin.is_trivial()) {
    SpectrumSlice s;
    s.origin.family = OrbitKey::Family::AlphaZero;
    s.origin.exact = true;
    s.origin.multiplicity = 2;
    s.window_lo = lo;
    s.window_hi = hi;
    s.window_bounded = true;
    s.complete = true;
    s.eigenvalues.push_back(EigEntry{lambda_bar, 2, 0, 0});
    slices.push_back(std::move(s));
  }

  // Character eigenvalues sit at offset 2 pi sqrt(S/A) with S = |alpha|^2,
  // so in-window requires |alpha| <= sqrt(A) W / (2 pi); pad upward.
  const double norm_bound = std::sqrt(A) * W / (2.0 * kPi) * (1.0 + kBoundPad);
  const std::vector<ToroidalOrbit> tors =
      toroidal_orbits(h, norm_bound, true, exec);
  {
    std::vector<SpectrumSlice> tor_slices(tors.size());
    const std::int64_t n = static_cast<std::int64_t>(tors.size());
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(worker_count()) schedule(static)
#endif
      for (std::int64_t i = 0; i < n; ++i) {
        tor_slices[i] = toroidal_slice(tors[i], A, lambda_bar, lo, hi);
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        tor_slices[i] = toroidal_slice(tors[i], A, lambda_bar, lo, hi);
      }
    }
    for (auto& s : tor_slices) slices.push_back(std::move(s));
  }

  // Every ladder eigenvalue of a central orbit sits at offset >= 2 pi |d|
  // (the p = 0 value at exactly 2 pi |d|), so in-window requires
  // |d| <= W / (2 pi); pad upward.
  const double d_bound = W / (2.0 * kPi) * (1.0 + kBoundPad);
  const std::vector<CentralOrbit> cens = central_orbits(h, d_bound);
  {
    std::vector<SpectrumSlice> cen_slices(cens.size());
    const std::int64_t n = static_cast<std::int64_t>(cens.size());
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(worker_count()) schedule(static)
#endif
      for (std::int64_t i = 0; i < n; ++i) {
        cen_slices[i] = central_slice(cens[i], h, A, lambda_bar, W, lo, hi, p_cap);
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        cen_slices[i] = central_slice(cens[i], h, A, lambda_bar, W, lo, hi, p_cap);
      }
    }
    for (auto& s : cen_slices) slices.push_back(std::move(s));
  }

  return slices;
}

std::vector<std::pair<double, std::int64_t>> flatten_spectrum(
    const std::vector<SpectrumSlice>& slices) {
  std::vector<std::pair<double, std::int64_t>> out;
  for (const SpectrumSlice& s : slices) {
    for (const EigEntry& e : s.eigenvalues) {
      out.emplace_back(e.value, e.multiplicity);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool spectrum_symmetric_about(const std::vector<SpectrumSlice>& slices,
                              double center, double pair_tol) {
  std::vector<std::pair<double, std::int64_t>> neg, pos;
  for (const SpectrumSlice& s : slices) {
    for (const EigEntry& e : s.eigenvalues) {
      const double off = e.value - center;
      if (off < -pair_tol) {
        neg.emplace_back(-off, e.multiplicity);
      } else if (off > pair_tol) {
        pos.emplace_back(off, e.multiplicity);
      }
      // |off| <= pair_tol pairs with itself.
    }
  }
  std::sort(neg.begin(), neg.end());
  std::sort(pos.begin(), pos.end());
  std::size_t i = 0, j = 0;
  std::int64_t have_i = 0, have_j = 0;
  while (i < neg.size() && j < pos.size()) {
    if (have_i == 0) have_i = neg[i].second;
    if (have_j == 0) have_j = pos[j].second;
    if (std::fabs(neg[i].first - pos[j].first) > pair_tol) return false;
    const std::int64_t used = std::min(have_i, have_j);
    have_i -= used;
    have_j -= used;
    if (have_i == 0) ++i;
    if (have_j == 0) ++j;
  }
  return i == neg.size() && j == pos.size() && have_i == 0 && have_j == 0;
}

std::array<double, 4> five_dim_finite_eigenvalues(double aX, double aY1, double aY2) {
  const double common = 64.0 * kPi * kPi * aX * aX +
                        64.0 * kPi * kPi * (aY1 * aY1 + aY2 * aY2) + 1.0;
  const double r_plus = std::sqrt(common + 16.0 * kPi * aX);
  const double r_minus = std::sqrt(common - 16.0 * kPi * aX);
  return {0.25 + 0.25 * r_plus, 0.25 - 0.25 * r_plus,
          -0.25 + 0.25 * r_minus, -0.25 - 0.25 * r_minus};
}

CMatrix five_dim_finite_matrix(double aX, double aY1, double aY2) {
  const GMatrix one_prime = pauli_matrix(Pauli::OnePrime);
  const GMatrix s1 = pauli_matrix(Pauli::Sigma1);
  const GMatrix s2 = pauli_matrix(Pauli::Sigma2);
  const GMatrix id = pauli_matrix(Pauli::One);
  CMatrix M = gkron(one_prime, one_prime).to_cmatrix(Complex(-2.0 * kPi * aX, 0.0));
  M = M + gkron(s1, id).to_cmatrix(Complex(-2.0 * kPi * aY1, 0.0));
  M = M + gkron(s2, id).to_cmatrix(Complex(-2.0 * kPi * aY2, 0.0));
  M = M + (gkron(s1, s2) - gkron(s2, s1)).to_cmatrix(Complex(0.25, 0.0));
  return M;
}

FiveDimBand five_dim_band_matrix(double b2, double g1, double g2, std::int64_t p_max) {
  const double d = std::sqrt(g1 * g1 + g2 * g2);
  if (!(d > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "g1 and g2 must not both vanish");
  }
  if (p_max < 0) {
    throw Error(ErrorCode::InvalidParameter, "p_max must be nonnegative");
  }
  const std::size_t levels = static_cast<std::size_t>(p_max) + 1;
  const std::size_t dim = 4 * levels;
  FiveDimBand out{CMatrix(dim, dim), {}};

  for (std::size_t p = 0; p < levels; ++p) {
    for (std::size_t lf = 0; lf < 4; ++lf) {
      const std::vector<int> ell = index_to_ell(lf, 2);
      const int l1 = ell[0];
      const int l2 = ell[1];
      const std::size_t i = 4 * p + lf;

      out.matrix.at(i, i) = Complex(-2.0 * kPi * (g1 * b2 / d) * double(l1 * l2), 0.0);

      if (p > 0) {
        const double mag = 2.0 * std::sqrt(kPi * d * double(p));
        out.matrix.at(4 * p + (lf ^ 2u), i) = Complex(0.0, -mag * double(l1));
      }

      out.matrix.at(4 * p + (lf ^ 1u), i) = Complex(-0.25 - 2.0 * kPi * d * double(l1), 0.0);

      // Level shift: (p, l) couples to (p + l1, -l) with entry 1/4 in the
      // normalized basis; at p = 0, l1 = -1 the ladder annihilates (no
      // coupling), while targets beyond p_max are recorded as dropped.
      const std::int64_t p_to = static_cast<std::int64_t>(p) + l1;
      if (p_to >= 0) {
        if (p_to <= p_max) {
          out.matrix.at(4 * static_cast<std::size_t>(p_to) + (lf ^ 3u), i) =
              Complex(0.25, 0.0);
        } else {
          out.dropped.push_back(DroppedCoupling{static_cast<std::int64_t>(p), l1, l2, 0.25});
        }
      }
    }
  }
  if (!out.matrix.is_hermitian(tol().hermitian_check)) {
    throw Error(ErrorCode::NotHermitian, "band truncation failed the Hermitian check");
  }
  return out;
}

}  // namespace nilspec
