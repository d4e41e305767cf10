#pragma once

// Unimodular multipliers α on the line, their two-scale quotients
// δ_α(ξ) = α(2ξ)·conj α(ξ), and the gauge action on scaling pairs.

#include <optional>

#include "frameforge/scaling.hpp"

namespace frameforge {

namespace detail {
inline void require_plain(const StepFunction& f, const char* what) {
  if (f.char_exp() != Dyadic(0)) throw input_error(std::string(what) + " must not carry a character");
}
inline void require_plain(const PeriodicStepFunction& f, const char* what) {
  if (f.char_exp() != Dyadic(0)) throw input_error(std::string(what) + " must not carry a character");
}
inline void require_unimodular(const Pieces& p, const char* what, double tol) {
  for (const auto& q : p)
    if (std::abs(q.v.abs() - 1.0) > tol) throw input_error(std::string(what) + " is not unimodular on " + q.iv.a.str());
}
}  // namespace detail

/// α(2ξ)·conj α(ξ) on window/2 minus [-inner, inner), wherever both factors are defined.
inline StepFunction delta(const StepFunction& alpha, const Dyadic& inner = Dyadic(0)) {
  const int w = alpha.window_exp();
  StepFunction d = multiply(dilate_inf(alpha, 1), conjugate(alpha));
  LineSet region = detail::half_window(w);
  if (Dyadic(0) < inner) region = set_difference(region, LineSet(w, {{-inner, inner}}));
  return restrict(d, region);
}

/// δ_α as a 1-periodic function, if all integer translates agree and they cover the torus.
inline std::optional<PeriodicStepFunction> is_in_M(const StepFunction& alpha, const Dyadic& inner = Dyadic(0),
                                                   double tol = kValueTol) {
  StepFunction d = delta(alpha, inner);
  FoldResult r = fold_periodic(d, d.support(), tol);
  if (!r.consistent || !(r.f.domain() == PeriodicSet::full())) return std::nullopt;
  return r.f;
}

/// μ(2ξ)·conj μ(ξ) for a 1-periodic μ.
inline PeriodicStepFunction delta(const PeriodicStepFunction& mu) { return multiply(compose_double(mu), conjugate(mu)); }

struct BuiltAlpha {
  StepFunction alpha;
  Dyadic core;  // α ≡ 1 on [-core, core); δ_α = ν only holds outside it
};

/// The unique α with δ_α = ν that equals alpha0 on I0 = [-N,-N/2) ∪ [N/2,N), extended outward to the
/// window and inward through `inner_steps` octaves.
inline BuiltAlpha build_alpha(const PeriodicStepFunction& nu, const StepFunction& alpha0, const Dyadic& n,
                                int inner_steps, double tol = kValueTol) {
  const int w = alpha0.window_exp();
  if (!(Dyadic(0) < n) || Dyadic::pow2(w) < n) throw input_error("build_alpha: N must lie in (0, 2^W]");
  if (inner_steps < 0) throw input_error("build_alpha: negative inner step count");
  if (!(nu.domain() == PeriodicSet::full())) throw input_error("build_alpha: nu must be defined on all of [0,1)");
  detail::require_plain(nu, "nu");
  detail::require_plain(alpha0, "alpha0");
  detail::require_unimodular(nu.pieces(), "nu", tol);

  LineSet ring = LineSet::symmetric(w, n.scaled(-1), n);
  StepFunction base = restrict(alpha0, ring);
  if (!(base.support() == ring)) throw input_error("build_alpha: alpha0 must be defined on all of I0");
  detail::require_unimodular(base.pieces(), "alpha0", tol);

  StepFunction nu_line = lift(nu, w);
  StepFunction out = base;
  StepFunction band = base;
  for (Dyadic edge = n; edge < Dyadic::pow2(w); edge = edge.scaled(1)) {
    band = dilate_inf(multiply(nu_line, band), -1);
    out = add(out, band);
  }
  band = base;
  StepFunction nu_bar = conjugate(nu_line);
  for (int k = 1; k <= inner_steps; ++k) {
    band = multiply(dilate_inf(band, 1), nu_bar);
    out = add(out, band);
  }
  Dyadic r = n.scaled(-inner_steps - 1);
  out = add(out, StepFunction::indicator(LineSet(w, {{-r, r}})));
  return {out, r};
}

inline BuiltAlpha build_alpha(const PeriodicStepFunction& nu, int window_exp) {
  Dyadic n = Dyadic::pow2(window_exp);
  StepFunction one = StepFunction::indicator(LineSet::symmetric(window_exp, n.scaled(-1), n));
  return build_alpha(nu, one, n, window_exp + 2);
}

struct GaugedPair {
  StepFunction phi;
  PeriodicStepFunction m0;
};

/// (α·φ, δ_α·m0 on S). Requires δ_α to be 1-periodic on all of window/2.
inline GaugedPair gauge_scaling(const StepFunction& phi, const PeriodicStepFunction& m0, const StepFunction& alpha,
                                double tol = kValueTol) {
  auto nu = is_in_M(alpha, Dyadic(0), tol);
  if (!nu) throw error("gauge: alpha(2x)/alpha(x) is not 1-periodic");
  GaugedPair g;
  g.phi = multiply(alpha, phi);
  g.m0 = multiply(*nu, m0);
  return g;
}

}  // namespace frameforge
