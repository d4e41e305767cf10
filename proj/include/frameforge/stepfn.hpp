#pragma once

// Piecewise-constant complex functions with exact dyadic breakpoints, on the
// line (optionally twisted by one global character e^{2πicξ}) and on the torus.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "frameforge/amp.hpp"
#include "frameforge/dyadic.hpp"

namespace frameforge {

struct Piece {
  Interval iv;
  Amp v;
  friend bool operator==(const Piece&, const Piece&) = default;
};
using Pieces = std::vector<Piece>;

namespace detail {

inline std::vector<Dyadic> breakpoints(const Pieces& x, const Pieces& y) {
  std::vector<Dyadic> pts;
  pts.reserve(2 * (x.size() + y.size()));
  for (const auto& p : x) pts.insert(pts.end(), {p.iv.a, p.iv.b});
  for (const auto& p : y) pts.insert(pts.end(), {p.iv.a, p.iv.b});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Merges touching pieces with identical values.
inline Pieces merge_adjacent(Pieces in) {
  Pieces out;
  for (auto& p : in) {
    if (!out.empty() && out.back().iv.b == p.iv.a && out.back().v == p.v)
      out.back().iv.b = p.iv.b;
    else
      out.push_back(p);
  }
  return out;
}

using CombineOp = std::function<std::optional<Amp>(const Amp*, const Amp*)>;

/// Common refinement of two sorted disjoint piece lists; op sees nullptr where a list has no piece.
inline Pieces combine(const Pieces& x, const Pieces& y, const CombineOp& op) {
  auto pts = breakpoints(x, y);
  Pieces out;
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Dyadic& lo = pts[k];
    const Dyadic& hi = pts[k + 1];
    while (i < x.size() && x[i].iv.b <= lo) ++i;
    while (j < y.size() && y[j].iv.b <= lo) ++j;
    const Amp* a = (i < x.size() && x[i].iv.a <= lo) ? &x[i].v : nullptr;
    const Amp* b = (j < y.size() && y[j].iv.a <= lo) ? &y[j].v : nullptr;
    if (!a && !b) continue;
    if (auto r = op(a, b)) out.push_back({{lo, hi}, *r});
  }
  return merge_adjacent(std::move(out));
}

/// Sum of possibly overlapping pieces on the refinement of all their endpoints.
inline Pieces sum_overlapping(const Pieces& in) {
  std::vector<Dyadic> pts;
  for (const auto& p : in) pts.insert(pts.end(), {p.iv.a, p.iv.b});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return {};
  std::vector<Amp> acc(pts.size() - 1);
  std::vector<bool> hit(pts.size() - 1, false);
  for (const auto& p : in) {
    auto s = std::lower_bound(pts.begin(), pts.end(), p.iv.a) - pts.begin();
    auto e = std::lower_bound(pts.begin(), pts.end(), p.iv.b) - pts.begin();
    for (auto k = s; k < e; ++k) {
      acc[k] = acc[k] + p.v;
      hit[k] = true;
    }
  }
  Pieces out;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    if (hit[k]) out.push_back({{pts[k], pts[k + 1]}, snap(acc[k])});
  return merge_adjacent(std::move(out));
}

inline Pieces sorted_checked(Pieces p) {
  std::sort(p.begin(), p.end(), [](const Piece& x, const Piece& y) { return x.iv.a < y.iv.a; });
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k].iv.a < p[k].iv.b)) throw input_error("empty or reversed piece");
    if (k > 0 && p[k].iv.a < p[k - 1].iv.b) throw input_error("overlapping pieces");
  }
  return p;
}

inline const Piece* find_piece(const Pieces& p, const Dyadic& x) {
  auto it = std::upper_bound(p.begin(), p.end(), x, [](const Dyadic& v, const Piece& q) { return v < q.iv.a; });
  if (it == p.begin()) return nullptr;
  --it;
  return it->iv.contains(x) ? &*it : nullptr;
}

inline std::vector<Interval> intervals_of(const Pieces& p) {
  std::vector<Interval> v;
  for (const auto& q : p) v.push_back(q.iv);
  return canonical(v);
}

}  // namespace detail

/// ξ ↦ e^{2πicξ}·(piecewise-constant value); zero outside the stored pieces.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(int window_exp, Pieces pieces, Dyadic char_exp = {}) : window_exp_(window_exp) {
    LineSet w = LineSet::window(window_exp);
    Pieces kept;
    for (auto& p : detail::sorted_checked(std::move(pieces))) {
      if (p.iv.a < w.lo() || w.hi() < p.iv.b) throw error("piece escapes window");
      p.v = snap(p.v);
      if (!p.v.is_zero()) kept.push_back(p);
    }
    pieces_ = detail::merge_adjacent(std::move(kept));
    char_exp_ = pieces_.empty() ? Dyadic{} : char_exp;
  }

  static StepFunction indicator(const LineSet& s, Amp value = 1.0) {
    Pieces p;
    for (const auto& i : s.intervals()) p.push_back({i, value});
    return {s.window_exp(), std::move(p)};
  }
  static StepFunction zero(int window_exp) { return {window_exp, {}}; }

  int window_exp() const { return window_exp_; }
  const Dyadic& char_exp() const { return char_exp_; }
  const Pieces& pieces() const& { return pieces_; }
  Pieces pieces() && { return std::move(pieces_); }
  bool is_zero() const { return pieces_.empty(); }

  /// Stored coefficient at x (character not applied).
  Amp coefficient(const Dyadic& x) const {
    auto* p = detail::find_piece(pieces_, x);
    return p ? p->v : Amp{};
  }
  cplx operator()(const Dyadic& x) const { return cis(char_exp_ * x) * coefficient(x).value(); }

  LineSet support() const { return LineSet(window_exp_, detail::intervals_of(pieces_)); }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  int window_exp_ = 4;
  Dyadic char_exp_;
  Pieces pieces_;
};

/// A 1-periodic function given on [0,1) as e^{2πic{ξ}}·p({ξ}). Pieces may hold explicit zeros;
/// their union is the function's domain.
class PeriodicStepFunction {
 public:
  PeriodicStepFunction() = default;
  explicit PeriodicStepFunction(Pieces pieces, Dyadic char_exp = {}) : char_exp_(char_exp) {
    for (auto& p : pieces) {
      if (p.iv.a < Dyadic(0) || Dyadic(1) < p.iv.b) throw input_error("periodic piece outside [0,1)");
      p.v = snap(p.v);
    }
    pieces_ = detail::merge_adjacent(detail::sorted_checked(std::move(pieces)));
  }

  static PeriodicStepFunction constant(Amp v) { return PeriodicStepFunction({{{Dyadic(0), Dyadic(1)}, v}}); }
  static PeriodicStepFunction indicator(const PeriodicSet& s, Amp v = 1.0) {
    Pieces p;
    for (const auto& i : s.intervals()) p.push_back({i, v});
    return PeriodicStepFunction(std::move(p));
  }
  /// v on S and explicit 0 on the rest of [0,1).
  static PeriodicStepFunction indicator_full(const PeriodicSet& s, Amp v = 1.0) {
    Pieces p;
    for (const auto& i : s.intervals()) p.push_back({i, v});
    for (const auto& i : complement(s).intervals()) p.push_back({i, Amp{}});
    return PeriodicStepFunction(std::move(p));
  }

  const Dyadic& char_exp() const { return char_exp_; }
  const Pieces& pieces() const& { return pieces_; }
  Pieces pieces() && { return std::move(pieces_); }
  PeriodicSet domain() const { return PeriodicSet(detail::intervals_of(pieces_)); }

  friend bool operator==(const PeriodicStepFunction&, const PeriodicStepFunction&) = default;
  /// Where the stored value is nonzero.
  PeriodicSet support() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_)
      if (!p.v.is_zero()) v.push_back(p.iv);
    return PeriodicSet(std::move(v));
  }

  Amp coefficient(const Dyadic& x) const {
    auto* p = detail::find_piece(pieces_, x.frac());
    return p ? p->v : Amp{};
  }
  cplx operator()(const Dyadic& x) const {
    Dyadic r = x.frac();
    return cis(char_exp_ * r) * coefficient(r).value();
  }

 private:
  Dyadic char_exp_;
  Pieces pieces_;
};

// ---------------------------------------------------------------- line algebra

namespace detail {
inline void same_window(const StepFunction& f, const StepFunction& g) {
  if (f.window_exp() != g.window_exp()) throw error("window mismatch between step functions");
}
}  // namespace detail

inline StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  detail::same_window(f, g);
  auto p = detail::combine(f.pieces(), g.pieces(), [](const Amp* a, const Amp* b) -> std::optional<Amp> {
    if (a && b) return *a * *b;
    return std::nullopt;
  });
  return {f.window_exp(), std::move(p), f.char_exp() + g.char_exp()};
}

inline StepFunction conjugate(const StepFunction& f) {
  Pieces p = f.pieces();
  for (auto& q : p) q.v = q.v.conj();
  return {f.window_exp(), std::move(p), -f.char_exp()};
}

inline StepFunction modulus(const StepFunction& f) {
  Pieces p = f.pieces();
  for (auto& q : p) q.v = q.v.modulus();
  return {f.window_exp(), std::move(p)};
}

inline StepFunction scale(const StepFunction& f, const Amp& z) {
  Pieces p = f.pieces();
  for (auto& q : p) q.v = q.v * z;
  return {f.window_exp(), std::move(p), f.char_exp()};
}

/// Pointwise sum; both summands must carry the same character (or one be zero).
inline StepFunction add(const StepFunction& f, const StepFunction& g) {
  detail::same_window(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.char_exp() != g.char_exp()) throw error("cannot add step functions with different characters");
  auto p = detail::combine(f.pieces(), g.pieces(), [](const Amp* a, const Amp* b) -> std::optional<Amp> {
    Amp s = (a ? *a : Amp{}) + (b ? *b : Amp{});
    return snap(s);
  });
  return {f.window_exp(), std::move(p), f.char_exp()};
}

inline StepFunction subtract(const StepFunction& f, const StepFunction& g) { return add(f, scale(g, -1.0)); }

/// ξ ↦ f(2^j ξ) restricted to the window.
inline StepFunction dilate_inf(const StepFunction& f, int j) {
  Pieces p;
  LineSet w = LineSet::window(f.window_exp());
  for (const auto& q : f.pieces()) {
    Dyadic a = std::max(q.iv.a.scaled(-j), w.lo()), b = std::min(q.iv.b.scaled(-j), w.hi());
    if (a < b) p.push_back({{a, b}, q.v});
  }
  return {f.window_exp(), std::move(p), f.char_exp().scaled(j)};
}

/// Fourier-side unitary dilation: ξ ↦ 2^{j/2} f(2^j ξ).
inline StepFunction fourier_dilate(const StepFunction& f, int j) { return scale(dilate_inf(f, j), Amp::half_power(j)); }

/// ξ ↦ f(ξ - t), restricted to the window.
inline StepFunction translate(const StepFunction& f, const Dyadic& t) {
  Pieces p;
  LineSet w = LineSet::window(f.window_exp());
  Amp phase = cis(-(f.char_exp() * t));
  for (const auto& q : f.pieces()) {
    Dyadic a = std::max(q.iv.a + t, w.lo()), b = std::min(q.iv.b + t, w.hi());
    if (a < b) p.push_back({{a, b}, q.v * phase});
  }
  return {f.window_exp(), std::move(p), f.char_exp()};
}

/// Multiplies by e^{2πitξ}.
inline StepFunction modulate(const StepFunction& f, const Dyadic& t) {
  return {f.window_exp(), f.pieces(), f.char_exp() + t};
}

/// Same function viewed in a larger (or equal) window.
inline StepFunction rewindow(const StepFunction& f, int window_exp) {
  LineSet w = LineSet::window(window_exp);
  Pieces p;
  for (const auto& q : f.pieces()) {
    Dyadic a = std::max(q.iv.a, w.lo()), b = std::min(q.iv.b, w.hi());
    if (a < b) p.push_back({{a, b}, q.v});
  }
  return {window_exp, std::move(p), f.char_exp()};
}

inline StepFunction restrict(const StepFunction& f, const LineSet& e) {
  if (f.window_exp() != e.window_exp()) throw error("window mismatch in restrict");
  return multiply(f, StepFunction::indicator(e));
}

inline double norm_sq(const StepFunction& f) {
  double s = 0.0;
  for (const auto& q : f.pieces()) s += q.v.abs_sq() * q.iv.length().to_double();
  return s;
}

/// ∫ f over the line, closed form per piece when the character is nontrivial.
inline cplx integral(const StepFunction& f) {
  cplx s{};
  const Dyadic& c = f.char_exp();
  for (const auto& q : f.pieces()) {
    if (c == Dyadic(0)) {
      s += q.v.value() * q.iv.length().to_double();
    } else {
      cplx denom{0.0, 2.0 * std::numbers::pi * c.to_double()};
      s += q.v.value() * (cis(c * q.iv.b) - cis(c * q.iv.a)) / denom;
    }
  }
  return s;
}

inline cplx inner_product(const StepFunction& f, const StepFunction& g) { return integral(multiply(f, conjugate(g))); }

// ------------------------------------------------------------ periodic algebra

namespace detail {
// Folds line pieces (character c) onto [0,1) as fundamental-domain coefficients; may overlap.
inline Pieces fold_to_torus(const Pieces& in, const Dyadic& c) {
  Pieces out;
  for (const auto& q : in) {
    Dyadic a = q.iv.a;
    while (a < q.iv.b) {
      Dyadic n = a.floor();
      Dyadic e = std::min(q.iv.b, n + Dyadic(1));
      out.push_back({{a - n, e - n}, q.v * Amp(cis(c * n))});
      a = e;
    }
  }
  return out;
}
}  // namespace detail

/// Periodic extension of m on the window, as a line step function.
inline StepFunction lift(const PeriodicStepFunction& m, int window_exp) {
  Pieces p;
  const std::int64_t n = std::int64_t{1} << window_exp;
  for (std::int64_t k = -n; k < n; ++k) {
    Amp phase = cis(-(m.char_exp() * Dyadic(k)));
    for (const auto& q : m.pieces()) p.push_back({{q.iv.a + Dyadic(k), q.iv.b + Dyadic(k)}, q.v * phase});
  }
  return {window_exp, std::move(p), m.char_exp()};
}

/// Σ_k h(ξ+k) for a line step function h.
inline PeriodicStepFunction periodize_sum(const StepFunction& h) {
  return PeriodicStepFunction(detail::sum_overlapping(detail::fold_to_torus(h.pieces(), h.char_exp())), h.char_exp());
}

/// [f,g](ξ) = Σ_k f(ξ+k)·conj g(ξ+k).
inline PeriodicStepFunction bracket(const StepFunction& f, const StepFunction& g) {
  return periodize_sum(multiply(f, conjugate(g)));
}

/// p_φ = [φ,φ].
inline PeriodicStepFunction weight(const StepFunction& phi) { return periodize_sum(multiply(phi, conjugate(phi))); }

/// Fourier side of m • f.
inline StepFunction mul_periodic(const PeriodicStepFunction& m, const StepFunction& f) {
  return multiply(lift(m, f.window_exp()), f);
}

inline double integrate_periodic_abs_sq(const PeriodicStepFunction& m) {
  double s = 0.0;
  for (const auto& q : m.pieces()) s += q.v.abs_sq() * q.iv.length().to_double();
  return s;
}

inline PeriodicStepFunction p_combine(const PeriodicStepFunction& m, const PeriodicStepFunction& n,
                                      const detail::CombineOp& op, const Dyadic& c) {
  return PeriodicStepFunction(detail::combine(m.pieces(), n.pieces(), op), c);
}

/// Pointwise product on the intersection of domains.
inline PeriodicStepFunction multiply(const PeriodicStepFunction& m, const PeriodicStepFunction& n) {
  // Fundamental-domain coefficients multiply directly: e^{2πic{ξ}} e^{2πid{ξ}} = e^{2πi(c+d){ξ}}.
  return p_combine(
      m, n,
      [](const Amp* a, const Amp* b) -> std::optional<Amp> {
        if (a && b) return *a * *b;
        return std::nullopt;
      },
      m.char_exp() + n.char_exp());
}

inline PeriodicStepFunction conjugate(const PeriodicStepFunction& m) {
  Pieces p = m.pieces();
  for (auto& q : p) q.v = q.v.conj();
  return PeriodicStepFunction(std::move(p), -m.char_exp());
}

inline PeriodicStepFunction modulus(const PeriodicStepFunction& m) {
  Pieces p = m.pieces();
  for (auto& q : p) q.v = q.v.modulus();
  return PeriodicStepFunction(std::move(p));
}

inline PeriodicStepFunction scale(const PeriodicStepFunction& m, const Amp& z) {
  Pieces p = m.pieces();
  for (auto& q : p) q.v = q.v * z;
  return PeriodicStepFunction(std::move(p), m.char_exp());
}

/// Pointwise sum on the union of domains.
inline PeriodicStepFunction add(const PeriodicStepFunction& m, const PeriodicStepFunction& n) {
  if (m.char_exp() != n.char_exp() && !m.support().empty() && !n.support().empty())
    throw error("cannot add periodic functions with different characters");
  Dyadic c = m.support().empty() ? n.char_exp() : m.char_exp();
  return p_combine(
      m, n, [](const Amp* a, const Amp* b) -> std::optional<Amp> { return snap((a ? *a : Amp{}) + (b ? *b : Amp{})); },
      c);
}

/// Keeps only the part of m on S.
inline PeriodicStepFunction restrict_domain(const PeriodicStepFunction& m, const PeriodicSet& s) {
  return p_combine(
      m, PeriodicStepFunction::indicator(s),
      [](const Amp* a, const Amp* b) -> std::optional<Amp> {
        if (a && b) return *a;
        return std::nullopt;
      },
      m.char_exp());
}

/// Overwrites m with n wherever n is defined.
inline PeriodicStepFunction overlay(const PeriodicStepFunction& m, const PeriodicStepFunction& n) {
  if (m.char_exp() != n.char_exp()) throw error("overlay requires equal characters");
  return p_combine(
      m, n, [](const Amp* a, const Amp* b) -> std::optional<Amp> { return b ? *b : *a; }, m.char_exp());
}

/// ξ ↦ m(ξ + t).
inline PeriodicStepFunction shift(const PeriodicStepFunction& m, const Dyadic& t) {
  Pieces p;
  const Dyadic& c = m.char_exp();
  for (const auto& q : m.pieces()) {
    // x ∈ [a,b) lands at ξ = x - t - n with n = floor(x - t); the character contributes e^{2πic(t+n)}.
    Dyadic cur = q.iv.a - t, end = q.iv.b - t;
    while (cur < end) {
      Dyadic n = cur.floor();
      Dyadic e = std::min(end, n + Dyadic(1));
      p.push_back({{cur - n, e - n}, q.v * Amp(cis(c * (t + n)))});
      cur = e;
    }
  }
  return PeriodicStepFunction(std::move(p), c);
}

/// ξ ↦ m(2ξ).
inline PeriodicStepFunction compose_double(const PeriodicStepFunction& m) {
  Pieces p;
  Amp wrap = cis(-m.char_exp());
  for (const auto& q : m.pieces()) {
    p.push_back({{q.iv.a.scaled(-1), q.iv.b.scaled(-1)}, q.v});
    p.push_back({{(q.iv.a + Dyadic(1)).scaled(-1), (q.iv.b + Dyadic(1)).scaled(-1)}, q.v * wrap});
  }
  return PeriodicStepFunction(std::move(p), m.char_exp().scaled(1));
}

struct FoldResult {
  PeriodicStepFunction f;
  bool consistent = true;
  Dyadic witness;  // first point where two translates disagree
};

/// Reads a line step function on `region` (zero where f has no piece) as a 1-periodic function,
/// checking that all Z-translates agree to within tol.
inline FoldResult fold_periodic(const StepFunction& f, const LineSet& region, double tol) {
  if (f.window_exp() != region.window_exp()) throw error("window mismatch in fold_periodic");
  Pieces explicit_pieces = detail::combine(f.pieces(), StepFunction::indicator(region).pieces(),
                                           [](const Amp* a, const Amp* b) -> std::optional<Amp> {
                                             if (!b) return std::nullopt;
                                             return a ? *a : Amp{};
                                           });
  Pieces folded = detail::fold_to_torus(explicit_pieces, f.char_exp());
  std::sort(folded.begin(), folded.end(), [](const Piece& x, const Piece& y) { return x.iv.a < y.iv.a; });
  std::vector<Dyadic> pts;
  for (const auto& p : folded) pts.insert(pts.end(), {p.iv.a, p.iv.b});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  FoldResult r;
  Pieces out;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    std::optional<Amp> val;
    for (const auto& p : folded) {
      if (pts[k + 1] <= p.iv.a) break;
      if (p.iv.a <= pts[k] && pts[k] < p.iv.b) {
        if (!val) {
          val = p.v;
        } else if (!near(*val, p.v, tol) && r.consistent) {
          r.consistent = false;
          r.witness = pts[k];
        }
      }
    }
    if (val) out.push_back({{pts[k], pts[k + 1]}, *val});
  }
  r.f = PeriodicStepFunction(std::move(out), f.char_exp());
  return r;
}

}  // namespace frameforge
