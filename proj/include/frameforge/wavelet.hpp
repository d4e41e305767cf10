#pragma once

// Wavelets with step Fourier transforms: synthesis from a scaling pair and a
// high-pass filter, and the exact finite-sum tests for the Parseval frame
// property (octave sums, the t_q cross sums, norms, the dimension function).

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/filterbank.hpp"
#include "frameforge/unimodular.hpp"

namespace frameforge {

struct Wavelet {
  StepFunction psi;
  std::string provenance;
};

/// ψ̂(ξ) = m1(ξ/2)·φ̂(ξ/2), clipped to the window.
inline StepFunction synthesize(const StepFunction& phi, const PeriodicStepFunction& m1) {
  StepFunction psi = dilate_inf(mul_periodic(m1, phi), -1);
  if (psi.is_zero()) throw error("degenerate high-pass: the synthesized wavelet is zero");
  return psi;
}

namespace detail {

inline StepFunction abs_sq(const StepFunction& f) {
  StepFunction m = modulus(f);
  return multiply(m, m);
}

// Smallest |ξ| on the support, or 0 if the support touches the origin.
inline Dyadic inner_radius(const StepFunction& f) {
  std::optional<Dyadic> r;
  for (const auto& q : f.pieces()) {
    Dyadic d;
    if (Dyadic(0) < q.iv.a)
      d = q.iv.a;
    else if (q.iv.b <= Dyadic(0))
      d = -q.iv.b;
    else
      return Dyadic(0);
    if (!r || d < *r) r = d;
  }
  return r.value_or(Dyadic(0));
}

inline int floor_log2(const Dyadic& x) {
  int k = 0;
  while (x < Dyadic::pow2(k)) --k;
  while (Dyadic::pow2(k + 1) <= x) ++k;
  return k;
}

// Maps each piece of g ≥ 0 (value = weight) into [1,2) by powers of 2; positive and reflected negative sides.
inline std::pair<Pieces, Pieces> fold_onto_octave(const StepFunction& g) {
  Pieces pos, neg;
  for (const auto& q : g.pieces()) {
    bool positive = Dyadic(0) < q.iv.a;
    if (!positive && Dyadic(0) < q.iv.b) throw input_error("non-annular support: a piece touches the origin");
    Dyadic lo = positive ? q.iv.a : -q.iv.b, hi = positive ? q.iv.b : -q.iv.a;
    if (lo == Dyadic(0)) throw input_error("non-annular support: a piece touches the origin");
    Pieces& out = positive ? pos : neg;
    Dyadic a = lo;
    while (a < hi) {
      int k = floor_log2(a);
      Dyadic e = std::min(hi, Dyadic::pow2(k + 1));
      out.push_back({{a.scaled(-k), e.scaled(-k)}, q.v});
      a = e;
    }
  }
  return {sum_overlapping(pos), sum_overlapping(neg)};
}

}  // namespace detail

struct Deviation {
  double value = 0.0;
  std::optional<Interval> witness;  // octave piece in [1,2) (or its mirror) with the largest defect
  bool negative_side = false;
};

/// sup over ξ of |Σ_j |ψ̂(2^j ξ)|² - target|, computed exactly on one octave per side.
inline Deviation calderon_deviation(const StepFunction& psi, double target = 1.0) {
  auto [pos, neg] = detail::fold_onto_octave(detail::abs_sq(psi));
  Deviation d;
  auto scan = [&](const Pieces& p, bool negative) {
    auto full = detail::combine(p, {{{Dyadic(1), Dyadic(2)}, Amp(0.0)}}, [](const Amp* a, const Amp* b) -> std::optional<Amp> {
      if (!b) return std::nullopt;
      return a ? *a : Amp{};
    });
    for (const auto& q : full) {
      double dev = std::abs(q.v.value().real() - target);
      if (!d.witness || dev > d.value) {
        d.value = dev;
        d.witness = negative ? Interval{-q.iv.b, -q.iv.a} : q.iv;
        d.negative_side = negative;
      }
    }
  };
  scan(pos, false);
  scan(neg, true);
  return d;
}

/// The octave sum Σ_j |ψ̂(2^j ξ)|² if it is constant, else nullopt.
inline std::optional<double> calderon_constant(const StepFunction& psi, double tol = kValueTol) {
  auto [pos, neg] = detail::fold_onto_octave(detail::abs_sq(psi));
  std::optional<double> k;
  for (const Pieces* p : {&pos, &neg}) {
    Dyadic covered(0);
    for (const auto& q : *p) {
      covered += q.iv.length();
      double v = q.v.value().real();
      if (!k) k = v;
      if (std::abs(*k - v) > tol) return std::nullopt;
    }
    if (covered != Dyadic(1)) {
      if (k && std::abs(*k) > tol) return std::nullopt;
      k = 0.0;
    }
  }
  return k;
}

namespace detail {
inline int bits_for(std::int64_t q) {
  int b = 0;
  while ((std::int64_t{1} << b) < q) ++b;
  return b;
}
}  // namespace detail

/// t_q(ξ) = Σ_{j≥0} ψ̂(2^j ξ)·conj ψ̂(2^j(ξ+q)) as a step function, for odd q.
/// Viewed in a window widened by |q| so that no overlap is clipped.
inline StepFunction t_q_function(const StepFunction& psi, std::int64_t q) {
  if (q % 2 == 0) throw input_error("t_q is defined for odd q only");
  const int w = psi.window_exp() + detail::bits_for(q < 0 ? -q : q) + 1;
  StepFunction f = rewindow(psi, w);
  StepFunction s = StepFunction::zero(w);
  // ψ̂(2^j ·) lives in |ξ| < 2^{W-j}; past j = W+1 it is too narrow to meet its own odd shift.
  for (int j = 0; j <= psi.window_exp() + 2; ++j) {
    StepFunction g = dilate_inf(f, j);
    if (g.is_zero()) break;
    s = add(s, multiply(g, conjugate(translate(g, Dyadic(-q)))));
  }
  return s;
}

struct TqValue {
  std::int64_t q = 0;
  double max_abs = 0.0;
  std::optional<Interval> witness;  // piece where |t_q| is largest
};

inline TqValue t_q(const StepFunction& psi, std::int64_t q) {
  TqValue v;
  v.q = q;
  for (const auto& p : t_q_function(psi, q).pieces())
    if (p.v.abs() > v.max_abs) {
      v.max_abs = p.v.abs();
      v.witness = p.iv;
    }
  return v;
}

struct TqReport {
  std::vector<TqValue> values;
  double max_abs = 0.0;
  std::optional<TqValue> witness;  // first q with max |t_q| > tol
};

inline TqReport t_q_range(const StepFunction& psi, std::int64_t range, double tol = kValueTol) {
  TqReport r;
  for (std::int64_t q = -range; q <= range; ++q) {
    if (q % 2 == 0) continue;
    TqValue v = t_q(psi, q);
    r.values.push_back(v);
    r.max_abs = std::max(r.max_abs, v.max_abs);
    if (v.max_abs > tol && !r.witness) r.witness = v;
  }
  return r;
}

/// Beyond this range every t_q vanishes trivially: the two supports cannot overlap.
inline std::int64_t complete_tq_range(const StepFunction& psi) { return (std::int64_t{1} << (psi.window_exp() + 1)) - 1; }

struct ParsevalReport {
  Deviation calderon;
  TqReport tq;
  bool ok = false;
};

/// Exact characterization: octave sum ≡ 1 and t_q = 0 for all odd q (checked up to where it can be nonzero).
inline ParsevalReport is_parseval(const StepFunction& psi, double tol = kValueTol) {
  ParsevalReport r;
  r.calderon = calderon_deviation(psi);
  r.tq = t_q_range(psi, complete_tq_range(psi), tol);
  r.ok = r.calderon.value <= tol && !r.tq.witness;
  return r;
}

/// H(ξ) = Σ_{j≥1} |ψ̂(2^j ξ)|² on the window. Near 0 every dilate of the support is reached, so H equals
/// the octave sum there; that sum must be constant for H to be a finite step function.
inline StepFunction dilation_tail(const StepFunction& psi, double tol = kValueTol) {
  const int w = psi.window_exp();
  StepFunction g = detail::abs_sq(psi);
  if (g.is_zero()) return g;
  Dyadic r = detail::inner_radius(psi);
  if (r == Dyadic(0)) throw input_error("non-annular support: a piece touches the origin");
  auto k = calderon_constant(psi, tol);
  if (!k) throw error("octave sum is not constant; the dimension function is not a finite step function");
  LineSet outer = set_difference(LineSet::window(w), LineSet(w, {{-r, r}}));
  StepFunction h = StepFunction::zero(w);
  int depth = w - detail::floor_log2(r) + 2;
  for (int j = 1; j <= depth; ++j) h = add(h, restrict(dilate_inf(g, j), outer));
  return add(h, StepFunction::indicator(LineSet(w, {{-r, r}}), Amp(*k)));
}

namespace detail {
// zero where nothing folded
inline PeriodicStepFunction on_full_torus(const PeriodicStepFunction& d) {
  Pieces p = d.pieces();
  for (const auto& i : complement(d.domain()).intervals()) p.push_back({i, Amp{}});
  return PeriodicStepFunction(std::move(p), d.char_exp());
}
}  // namespace detail

/// D_ψ(ξ) = Σ_{j≥1} Σ_k |ψ̂(2^j(ξ+k))|².
inline PeriodicStepFunction D_psi(const StepFunction& psi, double tol = kValueTol) {
  if (psi.is_zero()) return PeriodicStepFunction::constant(0.0);
  return detail::on_full_torus(periodize_sum(dilation_tail(psi, tol)));
}

/// Σ_i [φ_i, φ_i].
inline PeriodicStepFunction dimension_function(const std::vector<StepFunction>& generators) {
  PeriodicStepFunction d = PeriodicStepFunction::constant(0.0);
  for (const auto& g : generators) d = add(d, detail::on_full_torus(weight(g)));
  return d;
}

/// sup |Σ_{j≥1} |ψ̂(2^j ξ)|² - |φ̂(ξ)|²| over the window.
inline std::pair<double, std::optional<Interval>> telescoping_deviation(const StepFunction& psi,
                                                                        const StepFunction& phi,
                                                                        double tol = kValueTol) {
  StepFunction diff = subtract(dilation_tail(psi, tol), detail::abs_sq(phi));
  double worst = 0.0;
  std::optional<Interval> where;
  for (const auto& q : diff.pieces())
    if (q.v.abs() > worst) {
      worst = q.v.abs();
      where = q.iv;
    }
  return {worst, where};
}

struct TestSum {
  double sum = 0.0;
  double norm_sq = 0.0;
  double deviation = 0.0;
  bool range_complete = true;  // no scale outside [j_lo, j_hi] can contribute
  int j_lo = 0, j_hi = 0;
};

namespace detail {
// Scales j at which 2^{-j}·supp f̂ can meet supp ψ̂ (both inside the window, away from 0).
inline std::pair<int, int> contributing_scales(const StepFunction& f, const StepFunction& psi) {
  Dyadic rf = inner_radius(f), rp = inner_radius(psi);
  if (rf == Dyadic(0)) throw input_error("test function must have annular Fourier support");
  if (rp == Dyadic(0)) throw input_error("non-annular support: a piece touches the origin");
  const int w = psi.window_exp();
  return {floor_log2(rf) - w - 1, w - floor_log2(rp) + 1};
}
}  // namespace detail

/// Σ_{j_lo ≤ j ≤ j_hi} Σ_k |<f, ψ_{j,k}>|², using Σ_k |<f, ψ_{j,k}>|² = ∫_0^1 |[2^{j/2} f̂(2^j ·), ψ̂]|².
inline TestSum parseval_on_test(const StepFunction& f, const StepFunction& psi, int j_lo, int j_hi) {
  if (f.window_exp() != psi.window_exp()) throw error("window mismatch");
  TestSum t;
  t.j_lo = j_lo;
  t.j_hi = j_hi;
  t.norm_sq = norm_sq(f);
  if (!f.is_zero() && !psi.is_zero()) {
    auto [lo, hi] = detail::contributing_scales(f, psi);
    t.range_complete = j_lo <= lo && hi <= j_hi;
    for (int j = j_lo; j <= j_hi; ++j) t.sum += integrate_periodic_abs_sq(bracket(fourier_dilate(f, j), psi));
  }
  t.deviation = std::abs(t.sum - t.norm_sq);
  return t;
}

inline TestSum parseval_on_test(const StepFunction& f, const StepFunction& psi) {
  if (f.is_zero() || psi.is_zero()) return parseval_on_test(f, psi, 0, -1);
  auto [lo, hi] = detail::contributing_scales(f, psi);
  return parseval_on_test(f, psi, lo, hi);
}

/// <ψ_{j,k}, ψ> vanishes for all j ≠ 0 and all k iff [ψ̂, ψ̂(2^j ·)] ≡ 0 for every j ≥ 1.
struct SemiorthogonalityReport {
  bool ok = true;
  double max_abs = 0.0;
  std::optional<std::pair<int, Interval>> witness;
};

inline SemiorthogonalityReport semiorthogonality(const StepFunction& psi, double tol = kValueTol) {
  SemiorthogonalityReport r;
  if (psi.is_zero()) return r;
  Dyadic rp = detail::inner_radius(psi);
  if (rp == Dyadic(0)) throw input_error("non-annular support: a piece touches the origin");
  int span = psi.window_exp() - detail::floor_log2(rp) + 1;
  for (int j = 1; j <= span; ++j) {
    PeriodicStepFunction b = bracket(psi, dilate_inf(psi, j));
    for (const auto& q : b.pieces()) {
      double a = q.v.abs();
      r.max_abs = std::max(r.max_abs, a);
      if (a > tol && r.ok) {
        r.ok = false;
        r.witness = {{j, q.iv}};
      }
    }
  }
  return r;
}

/// True if every value of D lies within tol of 0 or 1.
inline bool is_zero_one_valued(const PeriodicStepFunction& d, double tol = kValueTol) {
  for (const auto& q : d.pieces()) {
    double v = std::abs(q.v.value());
    if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
  }
  return true;
}

struct SemiorthogonalityEvidence {
  SemiorthogonalityReport exact;  // brackets, all j ≥ 1 and all k at once
  double max_inner = 0.0;         // sampled <ψ_{j,k}, ψ> for 1 ≤ j ≤ J, |k| ≤ K
  std::optional<std::pair<int, std::int64_t>> witness;
  bool zero_one_dimension = false;
  bool ok = false;
};

/// <ψ_{j,k}, ψ> = ∫ 2^{-j/2} ψ̂(2^{-j}ξ) e^{-2πik2^{-j}ξ} conj ψ̂(ξ) dξ.
inline cplx cross_scale_inner(const StepFunction& psi, int j, std::int64_t k) {
  StepFunction g = modulate(fourier_dilate(psi, -j), -Dyadic(k).scaled(-j));
  return inner_product(g, psi);
}

inline SemiorthogonalityEvidence semiorthogonality_evidence(const StepFunction& psi, int J, std::int64_t K,
                                                            double tol = kValueTol, double sum_tol = 1e-10) {
  SemiorthogonalityEvidence e;
  e.exact = semiorthogonality(psi, tol);
  for (int j = 1; j <= J; ++j)
    for (std::int64_t k = -K; k <= K; ++k) {
      double a = std::abs(cross_scale_inner(psi, j, k));
      if (a > e.max_inner) e.max_inner = a;
      if (a > sum_tol && !e.witness) e.witness = {{j, k}};
    }
  try {
    e.zero_one_dimension = is_zero_one_valued(D_psi(psi, tol), tol);
  } catch (const error&) {
    e.zero_one_dimension = false;
  }
  e.ok = e.exact.ok && !e.witness && e.zero_one_dimension;
  return e;
}

/// ψ̂'(ξ) = ν(ξ)·(μσ)(ξ/2)·ψ̂(ξ). Requires σ = μ(2·)conj μ on S.
inline StepFunction gauge_wavelet(const StepFunction& psi, const PeriodicStepFunction& mu,
                                  const PeriodicStepFunction& nu, const PeriodicStepFunction& sigma,
                                  const PeriodicSet& s, double tol = kValueTol) {
  PeriodicStepFunction want = restrict_domain(delta(mu), s);
  PeriodicStepFunction have = restrict_domain(sigma, s);
  if (!(have.domain() == s)) throw input_error("gauge: sigma is not defined on S");
  auto diff = detail::combine(want.pieces(), have.pieces(), [](const Amp* a, const Amp* b) -> std::optional<Amp> {
    return (a ? a->value() : cplx{}) - (b ? b->value() : cplx{});
  });
  if (want.char_exp() != have.char_exp()) throw input_error("gauge: sigma does not match delta(mu) on S");
  for (const auto& q : diff)
    if (q.v.abs() > tol) throw input_error("gauge: sigma does not match delta(mu) on S at " + q.iv.a.str());
  const int w = psi.window_exp();
  StepFunction half_part = dilate_inf(lift(multiply(mu, sigma), w), -1);
  return multiply(multiply(lift(nu, w), half_part), psi);
}


}  // namespace frameforge
