#pragma once

// Maximal scaling functions and projections onto them: the maximality test,
// P_E φ = χ_{E+Z}·φ̂, the three conditions under which a projection is again
// a scaling function, the constructive maximalization φ ↦ φ*, and the
// normalization θ̂ = φ̂*/√D.

#include <optional>
#include <utility>

#include "frameforge/filterbank.hpp"
#include "frameforge/unimodular.hpp"
#include "frameforge/wavelet.hpp"

namespace frameforge {

struct MaximalityReport {
  bool maximal = true;
  std::optional<Interval> witness;  // a piece of [0,1) where the weight vanishes
};

inline MaximalityReport is_maximal(const StepFunction& phi, double tol = kValueTol) {
  if (phi.is_zero()) throw input_error("the zero function is not a scaling candidate");
  PeriodicStepFunction p = weight(phi);
  MaximalityReport r;
  for (const auto& q : p.pieces())
    if (q.v.abs() <= tol) {
      r.maximal = false;
      r.witness = q.iv;
      return r;
    }
  PeriodicSet gaps = complement(p.domain());
  if (!gaps.empty()) {
    r.maximal = false;
    r.witness = gaps.intervals().front();
  }
  return r;
}

inline StepFunction project(const StepFunction& phi, const PeriodicSet& e) {
  StepFunction out = restrict(phi, lift(e, phi.window_exp()));
  if (out.is_zero()) throw error("empty projection");
  return out;
}

struct ProjectionConditions {
  bool reductive = false;  // C/2 ⊆ C
  bool cond1 = false;      // C/2 contains a punctured neighbourhood of 0
  bool cond2 = false;      // |m0*| = 1 on (C/2 + Z) ∩ ((C∖C/2) + 1/2 + Z)
  bool cond3 = false;      // (C∖C/2 + Z) ∩ ((C∖C/2) + 1/2 + Z) = ∅
  bool displayed_form = false;
  bool window_sufficient = true;
  std::optional<Interval> reductive_witness, cond1_witness, cond2_witness, cond3_witness;
  LineSet C;

  bool all() const { return reductive && cond1 && cond2 && cond3; }
};

namespace detail {
// The gap next to 0 in a line set, if the set does not contain a punctured neighbourhood of 0.
inline std::optional<Interval> gap_at_origin(const LineSet& s) {
  Dyadic r = punctured_radius(s);
  if (Dyadic(0) < r) return std::nullopt;
  LineSet rest = complement_in_window(s);
  for (const auto& i : rest.intervals())
    if (i.a <= Dyadic(0) && Dyadic(0) <= i.b && i.a < i.b) {
      if (i.a < Dyadic(0) && Dyadic(0) < i.b) return Interval{Dyadic(0), i.b};
      return i;
    }
  return rest.intervals().empty() ? std::nullopt : std::optional<Interval>(rest.intervals().front());
}
}  // namespace detail

/// The three-condition test for P_E φ* to be a scaling function, plus C/2 ⊆ C.
/// Sets are seen through the window; C∖C/2 is taken inside window/2 where doubling stays visible.
inline ProjectionConditions check_projection_conditions(const StepFunction& phi_star,
                                                        const PeriodicStepFunction& m0_star, const PeriodicSet& e,
                                                        double tol = kValueTol) {
  const int w = phi_star.window_exp();
  ProjectionConditions pc;
  pc.C = intersect(phi_star.support(), lift(e, w));
  const LineSet& c = pc.C;
  LineSet half_c = dilate(c, -1);
  LineSet inner = intersect(c, detail::half_window(w));
  LineSet fringe = set_difference(inner, half_c);  // C∖C/2

  LineSet stray = set_difference(half_c, c);
  pc.reductive = stray.empty();
  if (!pc.reductive) pc.reductive_witness = stray.intervals().front();

  pc.window_sufficient = periodize(inner) == periodize(c);

  auto gap = detail::gap_at_origin(half_c);
  pc.cond1 = !gap.has_value();
  pc.cond1_witness = gap;

  LineSet covered = half_c;
  for (int n = 1; n <= w + 2; ++n) covered = set_union(covered, dilate_clipped(fringe, n));
  LineSet missing = set_difference(LineSet::window(w), covered);
  pc.displayed_form = missing.empty();

  PeriodicSet a = periodize(half_c);
  PeriodicSet f = periodize(fringe);
  PeriodicSet f_shift = shift_mod1(f, half());
  PeriodicSet where2 = intersect(a, f_shift);
  pc.cond2 = true;
  if (!is_subset(where2, m0_star.domain())) {
    pc.cond2 = false;
    pc.cond2_witness = set_difference(where2, m0_star.domain()).intervals().front();
  } else {
    for (const auto& q : restrict_domain(m0_star, where2).pieces())
      if (std::abs(q.v.abs() - 1.0) > tol) {
        pc.cond2 = false;
        pc.cond2_witness = q.iv;
        break;
      }
  }

  PeriodicSet clash = intersect(f, f_shift);
  pc.cond3 = clash.empty();
  if (!pc.cond3) pc.cond3_witness = clash.intervals().front();
  return pc;
}

struct MaximalizationChoices {
  PeriodicStepFunction nu = PeriodicStepFunction::constant(1.0);
  std::optional<PeriodicSet> B;
  std::pair<Amp, Amp> pair{Amp::inv_sqrt2(), Amp::inv_sqrt2()};
};

struct Maximalization {
  StepFunction phi_star;
  PeriodicStepFunction m0_star;
  StepFunction alpha;
  double tail_bound = 0.0;  // upper bound on the mass of φ̂* outside the window
  bool unchanged = false;
};

namespace detail {
inline Amp phase_of(const Amp& v) {
  if (v.is_zero()) return Amp(1.0);
  return Amp(v.c / std::abs(v.c));
}

inline PeriodicStepFunction phase_of(const PeriodicStepFunction& m) {
  Pieces p = m.pieces();
  for (auto& q : p) q.v = phase_of(q.v);
  return PeriodicStepFunction(std::move(p), m.char_exp());
}
}  // namespace detail

/// The completed low-pass filter m0* on all of [0,1).
inline PeriodicStepFunction maximal_lowpass(const PeriodicStepFunction& m0, const LineSet& c,
                                            const MaximalizationChoices& ch, double tol = kValueTol) {
  auto [p1, p2] = ch.pair;
  if (p1.is_zero() || p2.is_zero()) throw input_error("maximalize: both pair components must be nonzero");
  if (std::abs(p1.abs_sq() + p2.abs_sq() - 1.0) > tol) throw input_error("maximalize: pair must be a unit vector");

  PeriodicSet s = periodize(c);
  PeriodicSet a = periodize(dilate(c, -1));
  PeriodicSet a_half = set_difference(shift_mod1(a, half()), a);
  PeriodicSet rest = complement(halve_mod1(s));
  PeriodicSet b = ch.B ? *ch.B : intersect(rest, PeriodicSet({{Dyadic(0), half()}}));
  PeriodicSet b_half = shift_mod1(b, half());
  if (!intersect(b, b_half).empty() || !(set_union(b, b_half) == rest))
    throw input_error("maximalize: B and B + 1/2 must split the complement of S/2");
  if (!is_subset(a_half, ch.nu.domain())) throw input_error("maximalize: nu is not defined on C/2 + 1/2 + Z");
  detail::require_unimodular(restrict_domain(ch.nu, a_half).pieces(), "nu", tol);

  PeriodicStepFunction keep = restrict_domain(m0, a);
  PeriodicStepFunction partner = restrict_domain(shift(m0, half()), a_half);
  PeriodicStepFunction nu = restrict_domain(ch.nu, a_half);
  Pieces all = keep.pieces();
  for (const auto& q : detail::combine(partner.pieces(), nu.pieces(), [](const Amp* x, const Amp* y) -> std::optional<Amp> {
         if (!x || !y) return std::nullopt;
         return *y * complementary(*x);
       }))
    all.push_back(q);
  for (const auto& i : b.intervals()) all.push_back({i, p1});
  for (const auto& i : b_half.intervals()) all.push_back({i, p2});
  PeriodicStepFunction out(std::move(all), m0.char_exp());
  if (!(out.domain() == PeriodicSet::full())) throw error("maximalize: internal error, m0* does not cover [0,1)");
  return out;
}

/// φ* with φ = χ_{S+Z}·φ*, built as α·Π_j |m0*(2^{-j}ξ)|.
inline Maximalization maximalize(const StepFunction& phi, const PeriodicStepFunction& m0,
                                 const MaximalizationChoices& ch = {}, double tol = kValueTol) {
  const int w = phi.window_exp();
  Maximalization r;
  if (is_maximal(phi, tol).maximal) {
    r.phi_star = phi;
    r.m0_star = m0;
    r.alpha = StepFunction::indicator(LineSet::window(w));
    r.tail_bound = 1.0 - norm_sq(phi);
    r.unchanged = true;
    return r;
  }
  LineSet c = phi.support();
  r.m0_star = maximal_lowpass(m0, c, ch, tol);
  StepFunction mod = product_modulus(r.m0_star, w, tol);

  // α: the phase of φ on C, carried outward by α(ξ) = μ(ξ/2)·α(ξ/2) with μ the phase of m0*.
  Pieces base;
  for (const auto& q : phi.pieces()) base.push_back({q.iv, detail::phase_of(q.v)});
  StepFunction alpha(w, std::move(base), phi.char_exp());
  StepFunction mu_line = lift(detail::phase_of(r.m0_star), w);
  LineSet full = LineSet::window(w);
  for (int guard = 0; !(alpha.support() == full); ++guard) {
    if (guard > 2 * Dyadic::kMaxExp) throw error("maximalize: phase extension does not close");
    LineSet todo = set_difference(full, alpha.support());
    StepFunction next = restrict(dilate_inf(multiply(mu_line, alpha), -1), todo);
    if (next.is_zero()) throw error("maximalize: phase extension stalled (C misses a neighbourhood of 0)");
    alpha = add(alpha, next);
  }
  r.alpha = alpha;
  r.phi_star = multiply(alpha, mod);
  r.tail_bound = std::max(0.0, 1.0 - norm_sq(r.phi_star));
  return r;
}

inline Maximalization maximalize(const ScalingPair& p, const MaximalizationChoices& ch = {},
                                 double tol = kValueTol) {
  if (!p.all() || !p.m0) throw input_error("maximalize: input is not a scaling function");
  return maximalize(p.phi, *p.m0, ch, tol);
}

/// θ̂ = φ̂*/√D, defined when D > 0 wherever φ* has weight.
inline StepFunction semiorthogonalize(const StepFunction& phi_star, const PeriodicStepFunction& d,
                                      double tol = kValueTol) {
  if (d.char_exp() != Dyadic(0)) throw input_error("semiorthogonalize: D must not carry a character");
  PeriodicSet s = weight(phi_star).support();
  Pieces p;
  for (const auto& q : d.pieces()) {
    double v = q.v.value().real();
    if (std::abs(q.v.value().imag()) > tol || v < -tol) throw input_error("semiorthogonalize: D must be real and nonnegative");
    if (v <= tol) {
      if (!intersect(s, PeriodicSet({q.iv})).empty()) throw error("semiorthogonalization undefined");
      p.push_back({q.iv, Amp{}});
    } else {
      p.push_back({q.iv, sqrt_exact(v).inverse()});
    }
  }
  PeriodicStepFunction inv(std::move(p));
  if (!is_subset(s, inv.domain())) throw error("semiorthogonalization undefined");
  return mul_periodic(inv, phi_star);
}

}  // namespace frameforge
