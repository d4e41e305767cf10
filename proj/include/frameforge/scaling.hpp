#pragma once

// Membership in the class of (generalized) scaling functions: the support
// triple (C, S, S̃), the axioms S1–S3, and the low-pass filter m0.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/stepfn.hpp"

namespace frameforge {

inline constexpr double kValueTol = 1e-12;

struct Witness {
  std::string label;
  Interval where;  // piece of the canonical partition on which the check failed
  double expected = 0.0;
  double got = 0.0;
};

struct Check {
  bool ok = true;
  double max_defect = 0.0;
  std::vector<Witness> witnesses;
  std::string note;

  void fail(Witness w) {
    ok = false;
    if (witnesses.size() < 8) witnesses.push_back(std::move(w));
  }
  void defect(double d, const Witness& w, double tol) {
    if (d > max_defect) max_defect = d;
    if (d > tol) fail(w);
  }
};

struct not_reductive : error {
  Interval where;
  not_reductive(const std::string& why, Interval w) : error("not reductive: " + why), where(w) {}
};

struct SupportSets {
  LineSet C;
  PeriodicSet S;
  PeriodicSet S_tilde;
};

inline SupportSets support_sets(const StepFunction& phi) {
  if (phi.is_zero()) throw input_error("empty support: the zero function is not a scaling candidate");
  SupportSets s;
  s.C = phi.support();
  s.S = periodize(s.C);
  s.S_tilde = half_shift_closure(s.S);
  return s;
}

/// |φ̂| ≡ 1 on a punctured neighbourhood of 0, read off the pieces adjacent to 0.
inline Check check_S1(const StepFunction& phi, double tol = kValueTol) {
  Check c;
  const Pieces& p = phi.pieces();
  auto side = [&](bool right) {
    const Piece* hit = nullptr;
    for (const auto& q : p)
      if (right ? (q.iv.a <= Dyadic(0) && Dyadic(0) < q.iv.b) : (q.iv.a < Dyadic(0) && Dyadic(0) <= q.iv.b)) hit = &q;
    if (hit) {
      double got = hit->v.abs();
      Interval w = right ? Interval{Dyadic(0), hit->iv.b} : Interval{hit->iv.a, Dyadic(0)};
      c.defect(std::abs(got - 1.0), {"S1", w, 1.0, got}, tol);
      return;
    }
    // gap next to 0: find the nearest breakpoint on that side
    Interval w;
    if (right) {
      Dyadic nxt = phi.support().hi();
      for (const auto& q : p)
        if (Dyadic(0) < q.iv.a) {
          nxt = q.iv.a;
          break;
        }
      w = {Dyadic(0), nxt};
    } else {
      Dyadic prv = phi.support().lo();
      for (const auto& q : p)
        if (q.iv.b <= Dyadic(0)) prv = q.iv.b;
      w = {prv, Dyadic(0)};
    }
    c.defect(1.0, {"S1", w, 1.0, 0.0}, tol);
  };
  side(true);
  side(false);
  return c;
}

namespace detail {
inline StepFunction reciprocal(const StepFunction& f) {
  Pieces p = f.pieces();
  for (auto& q : p) q.v = q.v.inverse();
  return {f.window_exp(), std::move(p), -f.char_exp()};
}

inline LineSet half_window(int w) { return LineSet(w, {{-Dyadic::pow2(w - 1), Dyadic::pow2(w - 1)}}); }
}  // namespace detail

/// max over window/2 of |φ̂(2ξ) - m0(ξ)φ̂(ξ)|, with a witness piece.
inline std::pair<double, Interval> two_scale_residual(const StepFunction& phi, const PeriodicStepFunction& m0) {
  StepFunction lhs = dilate_inf(phi, 1);
  StepFunction rhs = restrict(mul_periodic(m0, phi), detail::half_window(phi.window_exp()));
  if (!lhs.is_zero() && !rhs.is_zero() && lhs.char_exp() != rhs.char_exp())
    return {std::numeric_limits<double>::infinity(), lhs.pieces().front().iv};
  StepFunction r = subtract(lhs, rhs);
  double worst = 0.0;
  Interval where{};
  for (const auto& q : r.pieces())
    if (q.v.abs() > worst) {
      worst = q.v.abs();
      where = q.iv;
    }
  return {worst, where};
}

/// The unique 1-periodic m0 on S with m0 = φ̂(2·)/φ̂ on C. Throws not_reductive.
inline PeriodicStepFunction extract_lowpass(const StepFunction& phi, double tol = kValueTol) {
  SupportSets sets = support_sets(phi);
  const int w = phi.window_exp();
  LineSet half_c = dilate(sets.C, -1);
  LineSet outside = set_difference(half_c, sets.C);
  if (!outside.empty()) throw not_reductive("C/2 is not contained in C", outside.intervals().front());

  LineSet region = intersect(sets.C, detail::half_window(w));
  StepFunction quotient = multiply(restrict(dilate_inf(phi, 1), region), detail::reciprocal(restrict(phi, region)));
  FoldResult folded = fold_periodic(quotient, region, tol);
  if (!folded.consistent)
    throw not_reductive("translates of C force different filter values", {folded.witness, folded.witness});
  PeriodicStepFunction m0 = folded.f;
  if (!(m0.domain() == sets.S)) throw error("window too small to determine the low-pass filter on all of S");

  auto [res, where] = two_scale_residual(phi, m0);
  if (res > tol) throw not_reductive("two-scale residual " + std::to_string(res), where);
  return m0;
}

/// |m0| ≤ 1 on S and Smith–Barnwell on S ∩ (S + 1/2).
inline Check check_S3(const PeriodicStepFunction& m0, const PeriodicSet& S, double tol = kValueTol) {
  Check c;
  PeriodicStepFunction on_s = restrict_domain(m0, S);
  for (const auto& q : on_s.pieces()) {
    double a = q.v.abs();
    if (a > 1.0 + tol) c.fail({"S3:|m0|<=1", q.iv, 1.0, a});
  }
  PeriodicSet both = intersect(S, shift_mod1(S, half()));
  PeriodicStepFunction here = restrict_domain(m0, both);
  PeriodicStepFunction there = restrict_domain(shift(m0, half()), both);
  auto sums = detail::combine(here.pieces(), there.pieces(), [](const Amp* a, const Amp* b) -> std::optional<Amp> {
    return Amp((a ? a->abs_sq() : 0.0) + (b ? b->abs_sq() : 0.0));
  });
  for (const auto& q : sums) {
    double s = q.v.c.real();
    c.defect(std::abs(s - 1.0), {"S3:Smith-Barnwell", q.iv, 1.0, s}, tol);
  }
  return c;
}

struct ScalingPair {
  StepFunction phi;
  std::optional<PeriodicStepFunction> m0;
  LineSet C;
  PeriodicSet S;
  PeriodicSet S_tilde;
  Check s1, s2, s3;

  bool all() const { return s1.ok && s2.ok && s3.ok; }
};

inline ScalingPair is_scaling(const StepFunction& phi, double tol = kValueTol) {
  ScalingPair p;
  p.phi = phi;
  SupportSets sets = support_sets(phi);
  p.C = sets.C;
  p.S = sets.S;
  p.S_tilde = sets.S_tilde;
  p.s1 = check_S1(phi, tol);
  try {
    p.m0 = extract_lowpass(phi, tol);
  } catch (const not_reductive& e) {
    p.s2.fail({"S2", e.where, 0.0, 0.0});
    p.s2.note = e.what();
  }
  if (p.m0) {
    p.s3 = check_S3(*p.m0, p.S, tol);
  } else {
    p.s3.ok = false;
    p.s3.note = "no low-pass filter (S2 failed)";
  }
  return p;
}

/// |φ̂(ξ)| = Π_{j≥1} |m0(2^{-j}ξ)| on the window; finite because |m0| ≡ 1 near 0 (mod Z).
inline StepFunction product_modulus(const PeriodicStepFunction& m0, int window_exp, double tol = kValueTol) {
  std::vector<Interval> unit;
  for (const auto& q : m0.pieces())
    if (std::abs(q.v.abs() - 1.0) <= tol) unit.push_back(q.iv);
  Dyadic r = punctured_radius(PeriodicSet(std::move(unit)));
  if (r == Dyadic(0)) throw error("product does not terminate: |m0| is not 1 on a punctured neighbourhood of 0");
  int depth = 1;
  while (r < Dyadic::pow2(window_exp - depth)) ++depth;
  StepFunction g = lift(modulus(m0), window_exp);
  StepFunction prod = StepFunction::indicator(LineSet::window(window_exp));
  for (int j = 1; j <= depth; ++j) prod = multiply(prod, dilate_inf(g, -j));
  return prod;
}

}  // namespace frameforge
