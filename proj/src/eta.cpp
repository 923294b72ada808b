// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/eta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

#include "nilspec/errors.hpp"
#include "nilspec/orbits.hpp"
#include "nilspec/pi_bounds.hpp"
#include "nilspec/spectrum.hpp"
#include "nilspec/tolerances.hpp"

namespace nilspec {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Relative padding applied to enumeration radii.  Overshoot only: extra
// candidates are discarded by the per-point membership tests below, while
// undershoot could silently drop a contribution.
constexpr double kBoundPad = 1e-9;

// Window membership tests shared by the closed-form count and the
// brute-force spectral classifier, so the two routes can only disagree
// through their enumeration, never through the predicates.  Every test is
// the sign of a * pi^2 + b * pi - c with rational a, b, c; exact manifolds
// decide it over a rational enclosure of pi (Equal is impossible there
// unless a = b = 0, since pi is transcendental), float-mode manifolds
// evaluate the same normalized form in doubles with a tolerance band that
// reports Ambiguous near the edge.
class WindowTests {
 public:
  explicit WindowTests(const Heisenberg3& h)
      : exact_(!h.float_mode()),
        A_(param_dyadic(h.A)),
        r_(param_dyadic(h.r)),
        Ad_(h.A.value()),
        rd_(h.r.value()) {}

  // ||alpha||^2 = S against the character disk of radius 1/(8 pi sqrt(A)):
  // sign(64 A S pi^2 - 1).
  Cmp disk(const Rational& S) const {
    if (exact_) {
      return compare_pi_quadratic(Rational(64) * A_ * S, Rational(0), Rational(1));
    }
    return compare_pi_quadratic_f(64.0 * Ad_ * S.to_double(), 0.0, 1.0,
                                  tol().float_membership);
  }

  // |mu| = t against the ladder-bottom window radius r/(8 pi A):
  // sign(8 A t pi / r - 1).
  Cmp ladder_bottom(const Rational& t) const {
    if (exact_) {
      return compare_pi_quadratic(Rational(0), Rational(8) * A_ * t / r_, Rational(1));
    }
    return compare_pi_quadratic_f(0.0, 8.0 * Ad_ * t.to_double() / rd_, 1.0,
                                  tol().float_membership);
  }

  // |mu| = t against the level-p window radius
  //   w_p = (r / (8 pi A)) (sqrt(1 + 16 p^2) - 4 p);
  // t < w_p rearranges (both sides positive, square once) to
  //   64 (A t / r)^2 pi^2 + 64 (A t / r) p pi < 1.
  Cmp level_window(const Rational& t, std::int64_t p) const {
    if (exact_) {
      const Rational q = A_ * t / r_;
      return compare_pi_quadratic(Rational(64) * q * q,
                                  Rational(64) * q * Rational(p), Rational(1));
    }
    const double q = Ad_ * t.to_double() / rd_;
    return compare_pi_quadratic_f(64.0 * q * q, 64.0 * q * static_cast<double>(p),
                                  1.0, tol().float_membership);
  }

 private:
  bool exact_;
  Rational A_;
  Rational r_;
  double Ad_ = 0.0;
  double rd_ = 0.0;
};

// Positive end of the mu lattice Z + (1 - eps3)/4.
Rational mu_lattice_min(const SpinStructure& spin) {
  return spin.eps3 == 1 ? Rational(1) : Rational(1, 2);
}

}  // namespace

HeatCoeffs3 heat_coeffs_3d(const Heisenberg3& h) {
  const Heisenberg3 v = validate(h);
  const double vol = volume(v).value();
  const double A = v.A.value();
  const double r = v.r.value();
  HeatCoeffs3 c;
  c.a00 = 2.0 * vol;
  c.a10 = r * r * static_cast<double>(v.m_v) / (12.0 * A);
  c.a11 = 0.0;
  c.a12 = 4.0 * vol;
  return c;
}

std::vector<double> heat_coeff_list(const HeatCoeffs3& c) {
  return {c.a10, c.a11, c.a12};
}

double a_j_of_c(const std::vector<double>& coeffs, double c) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * c + coeffs[k];
  return acc;
}

DetaResult deta_dc(int n, double a_half) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
  DetaResult out;
  if (n % 2 == 0) {
    out.even_dimension = true;  // locally constant in c: the derivative is 0
    return out;
  }
  out.value = -std::pow(2.0, 1.0 - n) * std::pow(kPi, -(n + 1) / 2.0) * a_half;
  return out;
}

EtaGeneralResult eta_symmetric_general(int n, double lambda_bar,
                                       const std::vector<double>& a_k,
                                       std::int64_t count_open,
                                       std::int64_t count_closed) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
  if (a_k.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "need one heat coefficient per degree 0 .. n-1");
  }
  double sum = 0.0;
  double power = 1.0;  // lambda_bar^k
  for (int k = 0; k < n; ++k) {
    power *= lambda_bar;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign / static_cast<double>(k + 1) * power * a_k[static_cast<std::size_t>(k)];
  }
  const double sgn = lambda_bar > 0.0 ? 1.0 : (lambda_bar < 0.0 ? -1.0 : 0.0);
  EtaGeneralResult out;
  out.value = -std::pow(2.0, 1.0 - n) * std::pow(kPi, -(n + 1) / 2.0) * sum +
              sgn * static_cast<double>(2 * count_open + count_closed);
  out.degenerate = lambda_bar == 0.0;
  return out;
}

EtaReport count_N(const Heisenberg3& h) {
  const Heisenberg3 v = validate(h);
  const WindowTests win(v);
  EtaReport rep;
  rep.lambda_bar = -1.0 / (4.0 * v.A.value());
  bool indet = false;

  // alpha = 0 occurs iff the spin structure is trivial and then carries a
  // two-dimensional eigenspace pinned at the symmetry point.
  if (v.spin.is_trivial()) rep.breakdown.alpha0 = 2;

  // Characters: each lattice point strictly inside the open disk adds 2,
  // each point exactly on the boundary circle adds 1.  The enumeration
  // radius is padded upward; membership is decided per point.
  const double radius =
      (1.0 / (8.0 * kPi * std::sqrt(v.A.value()))) * (1.0 + kBoundPad);
  for (const ToroidalOrbit& t :
       toroidal_orbits(v, radius, /*include_boundary=*/true)) {
    switch (win.disk(t.norm_sq())) {
      case Cmp::Less:
        rep.breakdown.toroidal_strict += 2;
        break;
      case Cmp::Equal:
        rep.breakdown.toroidal_boundary += 1;
        break;
      case Cmp::Greater:
        break;
      case Cmp::Ambiguous:
        indet = true;
        break;
    }
  }

  // Ladder-bottom family: lattice mu in (-r/(8 pi A), 0) adds 2 m_v |mu|;
  // a mu exactly at the left endpoint would put a zero eigenvalue of
  // multiplicity m_v |mu| on that single orbit.  m_v |mu| is an integer
  // for validated spin data (m_v is even whenever the lattice is
  // half-integral), so to_int64 below cannot throw.
  const Rational mu_min = mu_lattice_min(v.spin);
  for (Rational t = mu_min;; t += Rational(1)) {
    const Cmp c = win.ladder_bottom(t);
    if (c == Cmp::Greater) break;  // 8 A t pi / r grows with t: done
    const std::int64_t mult = (t * Rational(v.m_v)).to_int64();
    if (c == Cmp::Less) {
      rep.breakdown.central_mu_sum += 2 * mult;
    } else if (c == Cmp::Equal) {
      rep.breakdown.boundary_zero += mult;
    } else {
      indet = true;  // near the edge; the next t lands strictly outside
    }
  }

  // Level-p windows, p >= 1: signed lattice mu with 0 < |mu| < w_p adds
  // 2 m_v |mu|; the lattice is symmetric under negation, so walk t > 0 and
  // double.  |mu| exactly at w_p would put zero eigenvalues on both signed
  // orbits, 2 m_v |mu| in total.  w_p strictly decreases to 0, so the
  // outer loop ends at the first level whose window reaches no lattice
  // point.
  for (std::int64_t p = 1;; ++p) {
    bool reached = false;
    for (Rational t = mu_min;; t += Rational(1)) {
      const Cmp c = win.level_window(t, p);
      if (c == Cmp::Greater) break;
      reached = true;
      const std::int64_t mult = (t * Rational(v.m_v)).to_int64();
      if (c == Cmp::Less) {
        rep.breakdown.p_sum += 4 * mult;
      } else if (c == Cmp::Equal) {
        rep.breakdown.boundary_zero += 2 * mult;
      } else {
        indet = true;
      }
    }
    if (!reached) break;
  }

  rep.N = rep.breakdown.total();
  rep.indeterminate = indet;
  return rep;
}

EtaReport eta_3d(const Heisenberg3& h) {
  EtaReport rep = count_N(h);
  const double A = h.A.value();
  const double r = h.r.value();
  rep.eta0 = r * r * static_cast<double>(h.m_v) / (96.0 * kPi * kPi * A * A) -
             static_cast<double>(rep.N);
  return rep;
}

SpectralCounts spectral_counts(const Heisenberg3& h) {
  const Heisenberg3 v = validate(h);
  const WindowTests win(v);
  const double lambda_bar = -1.0 / (4.0 * v.A.value());
  // Window [lambda_bar - W, lambda_bar + W] with W just past |lambda_bar|
  // covers every eigenvalue in [lambda_bar, 0] plus a sliver beyond 0 that
  // the per-entry tests discard.
  const double W = std::fabs(lambda_bar) * (1.0 + 1e-6);
  const std::vector<SpectrumSlice> slices =
      assemble_spectrum(v, W, /*p_cap=*/1000000);

  SpectralCounts out;
  for (const SpectrumSlice& s : slices) {
    if (!s.complete) {
      throw Error(ErrorCode::NoConvergence,
                  "ladder cap reached before the spectral window was exhausted");
    }
    for (const EigEntry& e : s.eigenvalues) {
      switch (s.origin.family) {
        case OrbitKey::Family::AlphaZero:
          // Pinned exactly at the symmetry point by construction.
          out.closed += e.multiplicity;
          break;
        case OrbitKey::Family::Toroidal: {
          if (e.branch <= 0) break;  // mirror branch, below the symmetry point
          const Rational S = s.origin.alpha1 * s.origin.alpha1 +
                             s.origin.alpha2 * s.origin.alpha2;
          switch (win.disk(S)) {
            case Cmp::Less:
              out.open += e.multiplicity;
              break;
            case Cmp::Equal:
              out.closed += e.multiplicity;  // lands exactly on 0
              break;
            case Cmp::Greater:
              break;
            case Cmp::Ambiguous:
              out.indeterminate = true;
              break;
          }
          break;
        }
        case OrbitKey::Family::Central: {
          if (e.branch < 0) break;  // mirror branch, below the symmetry point
          if (e.branch == 0 && s.origin.mu.sign() >= 0) break;  // bottom value below it
          const Cmp c = e.branch == 0 ? win.ladder_bottom(s.origin.mu.abs())
                                      : win.level_window(s.origin.mu.abs(), e.p);
          switch (c) {
            case Cmp::Less:
              out.open += e.multiplicity;
              break;
            case Cmp::Equal:
              out.closed += e.multiplicity;
              break;
            case Cmp::Greater:
              break;
            case Cmp::Ambiguous:
              out.indeterminate = true;
              break;
          }
          break;
        }
      }
    }
  }
  return out;
}

double eta_zeta_identity_check(
    const std::vector<std::pair<double, std::int64_t>>& spectrum, double c,
    double s, double dc) {
  if (spectrum.empty() || !(dc > 0.0) || !(s > 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                "need a nonempty spectrum, dc > 0 and s > 1");
  }
  double lam_max = 0.0;
  for (const auto& [lam, mult] : spectrum) {
    if (mult <= 0) {
      throw Error(ErrorCode::InvalidParameter, "multiplicities must be positive");
    }
    for (const double shift : {c - dc, c, c + dc}) {
      if (lam + shift == 0.0) {
        throw Error(ErrorCode::InvalidParameter,
                    "an evaluation point collides with an eigenvalue");
      }
    }
    lam_max = std::max(lam_max, std::fabs(lam + c));
  }

  // eta_c(s) = sum mult sgn(lam + c) |lam + c|^-s, accumulated as two
  // sign-separated ascending sums so that a symmetric spectrum cancels to
  // an exact floating-point zero.
  const auto eta_partial = [&spectrum, s](double shift) {
    std::vector<double> pos, neg;
    for (const auto& [lam, mult] : spectrum) {
      const double x = lam + shift;
      const double term =
          static_cast<double>(mult) * std::pow(std::fabs(x), -s);
      (x > 0.0 ? pos : neg).push_back(term);
    }
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    double sum_pos = 0.0;
    for (const double t : pos) sum_pos += t;
    double sum_neg = 0.0;
    for (const double t : neg) sum_neg += t;
    return sum_pos - sum_neg;
  };

  double zeta_s1 = 0.0;  // sum mult |lam + c|^-(s+1), the derivative side
  double zeta_s = 0.0;   // like-exponent mass for the truncation veto
  for (const auto& [lam, mult] : spectrum) {
    const double ax = std::fabs(lam + c);
    zeta_s1 += static_cast<double>(mult) * std::pow(ax, -(s + 1.0));
    zeta_s += static_cast<double>(mult) * std::pow(ax, -s);
  }

  // Truncation veto: granting the omitted spectrum beyond the largest
  // enumerated magnitude unit density bounds its mass by
  // 2 int_Lam^inf t^-s dt = 2 Lam^(1-s) / (s - 1).
  const double tail = 2.0 * std::pow(lam_max, 1.0 - s) / (s - 1.0);
  if (!(tail <= tol().zeta_tail * zeta_s)) {
    throw Error(ErrorCode::TailTooLarge,
                "spectrum truncated too early for the requested accuracy");
  }

  const double fd = (eta_partial(c + dc) - eta_partial(c - dc)) / (2.0 * dc);
  const double rhs = s * zeta_s1;
  return std::fabs(fd + rhs) / rhs;
}

std::vector<EtaReport> constant_eta_family(double b1, double b2, std::int64_t m_v,
                                           std::int64_t m_w,
                                           const SpinStructure& spin,
                                           const std::vector<double>& r_values,
                                           Exec exec) {
  if (!(b1 > 0.0) || !(b2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveParam, "family slopes must be positive");
  }
  std::vector<Heisenberg3> members;
  members.reserve(r_values.size());
  for (const double r : r_values) {
    Heisenberg3 h;
    h.A = Param::from_double(b1 * r);
    h.r = Param::from_double(r);
    h.w2 = Param::from_double(b2 * std::sqrt(r));
    h.m_v = m_v;
    h.m_w = m_w;
    h.spin = spin;
    members.push_back(validate(h));  // reject bad data here, serially
  }

  std::vector<EtaReport> out(members.size());
  std::exception_ptr failure;
  const std::int64_t n = static_cast<std::int64_t>(members.size());
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = eta_3d(members[static_cast<std::size_t>(i)]);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (!failure) failure = std::current_exception();
        }
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = eta_3d(members[static_cast<std::size_t>(i)]);
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace nilspec
