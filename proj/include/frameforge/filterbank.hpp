#pragma once

// Two-channel filter banks (m0, m1) on the torus: completing m0 to S + 1/2,
// building the high-pass filter, and the unitarity check M(ξ)M(ξ)* = I.

#include "frameforge/scaling.hpp"

namespace frameforge {

/// Extends m0 from S to S ∪ (S + 1/2): on the new part m0 = μ0·√(1 - |m0(ξ+1/2)|²).
/// The stored character of m0 is carried onto the new pieces (absorbed into μ0).
inline PeriodicStepFunction extend_lowpass(const PeriodicStepFunction& m0, const PeriodicStepFunction& mu0) {
  PeriodicSet s = m0.domain();
  PeriodicSet fresh = set_difference(shift_mod1(s, half()), s);
  if (fresh.empty()) return m0;
  if (!is_subset(fresh, mu0.domain())) throw input_error("extend_lowpass: mu0 is not defined on (S + 1/2) \\ S");
  PeriodicStepFunction partner = restrict_domain(shift(m0, half()), fresh);
  PeriodicStepFunction mu = restrict_domain(mu0, fresh);
  auto p = detail::combine(partner.pieces(), mu.pieces(), [](const Amp* a, const Amp* b) -> std::optional<Amp> {
    if (!a || !b) return std::nullopt;
    return *b * complementary(*a);
  });
  Pieces all = m0.pieces();
  all.insert(all.end(), p.begin(), p.end());
  return PeriodicStepFunction(std::move(all), m0.char_exp());
}

inline PeriodicStepFunction extend_lowpass(const PeriodicStepFunction& m0) {
  return extend_lowpass(m0, PeriodicStepFunction::constant(1.0));
}

/// Fills m0 with 1/√2 wherever it is still undefined, so that it lives on all of [0,1).
inline PeriodicStepFunction fill_lowpass(const PeriodicStepFunction& m0) {
  PeriodicSet rest = complement(m0.domain());
  Pieces all = m0.pieces();
  for (const auto& i : rest.intervals()) all.push_back({i, Amp::inv_sqrt2()});
  return PeriodicStepFunction(std::move(all), m0.char_exp());
}

/// m1(ξ) = μ1(2ξ)·e^{2πiξ}·conj m0(ξ + 1/2), on the domain of m0 shifted by 1/2.
inline PeriodicStepFunction make_highpass(const PeriodicStepFunction& m0, const PeriodicStepFunction& mu1) {
  PeriodicStepFunction partner = conjugate(shift(m0, half()));
  PeriodicStepFunction twisted = multiply(compose_double(mu1), partner);
  if (!is_subset(partner.domain(), twisted.domain())) throw input_error("make_highpass: mu1(2x) is not defined on S~");
  return PeriodicStepFunction(twisted.pieces(), twisted.char_exp() + Dyadic(1));
}

inline PeriodicStepFunction make_highpass(const PeriodicStepFunction& m0) {
  return make_highpass(m0, PeriodicStepFunction::constant(1.0));
}

struct FilterBank {
  PeriodicStepFunction m0;
  PeriodicStepFunction m1;
};

/// Completes a low-pass filter on S to a bank on S~ = S ∪ (S + 1/2).
inline FilterBank complete_bank(const PeriodicStepFunction& m0, const PeriodicStepFunction& mu0,
                                const PeriodicStepFunction& mu1) {
  FilterBank b;
  b.m0 = extend_lowpass(m0, mu0);
  b.m1 = make_highpass(b.m0, mu1);
  return b;
}

/// max over `region` of the entries of M M* - I, where M(ξ) = [[m0(ξ), m0(ξ+½)], [m1(ξ), m1(ξ+½)]].
inline Check check_FP(const PeriodicStepFunction& m0, const PeriodicStepFunction& m1, const PeriodicSet& region,
                      double tol = kValueTol) {
  Check c;
  if (!is_subset(region, m0.domain()) || !is_subset(shift_mod1(region, half()), m0.domain()) ||
      !is_subset(region, m1.domain()) || !is_subset(shift_mod1(region, half()), m1.domain())) {
    c.ok = false;
    c.note = "filters are not defined on the region and its half shift";
    return c;
  }
  // Fundamental-domain coefficients; a common phase e^{2πi(c0-c1){ξ}} drops out of every modulus.
  auto a0 = restrict_domain(m0, region).pieces();
  auto b0 = restrict_domain(shift(m0, half()), region).pieces();
  auto a1 = restrict_domain(m1, region).pieces();
  auto b1 = restrict_domain(shift(m1, half()), region).pieces();
  std::vector<Dyadic> pts = detail::breakpoints(a0, b0);
  for (auto& x : {a1, b1})
    for (const auto& q : x) pts.insert(pts.end(), {q.iv.a, q.iv.b});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto at = [](const Pieces& p, const Dyadic& x) {
    auto* q = detail::find_piece(p, x);
    return q ? q->v.value() : cplx{};
  };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Dyadic& x = pts[k];
    if (!region.contains(x)) continue;
    Interval iv{x, pts[k + 1]};
    cplx u = at(a0, x), v = at(b0, x), s = at(a1, x), t = at(b1, x);
    double d0 = std::abs(std::norm(u) + std::norm(v) - 1.0);
    double d1 = std::abs(std::norm(s) + std::norm(t) - 1.0);
    double off = std::abs(u * std::conj(s) + v * std::conj(t));
    c.defect(d0, {"FP:row0", iv, 1.0, std::norm(u) + std::norm(v)}, tol);
    c.defect(d1, {"FP:row1", iv, 1.0, std::norm(s) + std::norm(t)}, tol);
    c.defect(off, {"FP:off-diagonal", iv, 0.0, off}, tol);
  }
  return c;
}

struct LPReport {
  Check lp1, lp2, lp3;
  bool admissible = false;  // the dilates of C cover the window

  bool all() const { return lp1.ok && lp2.ok && lp3.ok && admissible; }
};

/// Membership of m0 in the low-pass class for C.
inline LPReport check_LP(const PeriodicStepFunction& m0, const LineSet& c, double tol = kValueTol) {
  LPReport r;
  r.admissible = covers_by_dilation(c);

  std::vector<Interval> unit;
  for (const auto& q : m0.pieces())
    if (std::abs(q.v.abs() - 1.0) <= tol) unit.push_back(q.iv);
  PeriodicSet ones(std::move(unit));
  if (punctured_radius(ones) == Dyadic(0)) {
    Interval w{Dyadic(0), Dyadic(0)};
    PeriodicSet miss = complement(ones);
    if (!miss.empty()) w = miss.intervals().front();
    r.lp1.fail({"LP1:|m0|=1 near 0", w, 1.0, m0.coefficient(w.a).abs()});
  }

  PeriodicSet inner = periodize(dilate(c, -1));
  PeriodicSet fringe = periodize(set_difference(intersect(c, detail::half_window(c.window_exp())), dilate(c, -1)));
  if (!is_subset(inner, m0.domain()) || !is_subset(fringe, m0.domain())) {
    r.lp2.ok = false;
    r.lp2.note = "m0 is not defined on all of S";
  }
  for (const auto& q : restrict_domain(m0, inner).pieces())
    if (q.v.abs() <= tol) r.lp2.fail({"LP2:m0!=0 on C/2", q.iv, 1.0, 0.0});
  for (const auto& q : restrict_domain(m0, fringe).pieces())
    if (q.v.abs() > tol) r.lp2.fail({"LP2:m0=0 off C/2", q.iv, 0.0, q.v.abs()});

  r.lp3 = check_S3(m0, periodize(c), tol);
  return r;
}

inline Check check_FP(const FilterBank& b, double tol = kValueTol) {
  return check_FP(b.m0, b.m1, intersect(b.m0.domain(), b.m1.domain()), tol);
}

}  // namespace frameforge
