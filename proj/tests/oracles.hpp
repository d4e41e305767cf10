#pragma once

// Independent reference computations for the tests: plain double-precision
// pointwise evaluation of the raw pieces, dense grids and truncated sums.
// Nothing here goes through the piecewise algebra of the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "frameforge/stepfn.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Fn = std::function<cplx(double)>;

inline cplx eval(const frameforge::StepFunction& f, double x) {
  for (const auto& q : f.pieces())
    if (q.iv.a.to_double() <= x && x < q.iv.b.to_double()) {
      double c = f.char_exp().to_double();
      return std::polar(1.0, 2.0 * std::numbers::pi * c * x) * q.v.value();
    }
  return 0.0;
}

inline Fn fn(const frameforge::StepFunction& f) {
  return [f](double x) { return eval(f, x); };
}

// Periodic: the character acts on the fractional part.
inline cplx eval(const frameforge::PeriodicStepFunction& m, double x) {
  double t = x - std::floor(x);
  for (const auto& q : m.pieces())
    if (q.iv.a.to_double() <= t && t < q.iv.b.to_double())
      return std::polar(1.0, 2.0 * std::numbers::pi * m.char_exp().to_double() * t) * q.v.value();
  return 0.0;
}

// sup over a midpoint grid on ±[1,2) of |Σ_{|j|≤depth} |f(2^j ξ)|² - target|.
inline double grid_calderon(const Fn& f, double target = 1.0, int log_step = 12, int depth = 20) {
  const double h = std::ldexp(1.0, -log_step);
  double worst = 0.0;
  for (int sign : {1, -1})
    for (double x = 1.0 + h / 2; x < 2.0; x += h) {
      double s = 0.0;
      for (int j = -depth; j <= depth; ++j) s += std::norm(f(sign * std::ldexp(x, j)));
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

// t_q(ξ) = Σ_{j=0}^{depth} f(2^j ξ) conj f(2^j(ξ+q)), summed directly.
inline cplx pointwise_tq(const Fn& f, long q, double xi, int depth = 20) {
  cplx s = 0.0;
  for (int j = 0; j <= depth; ++j) s += f(std::ldexp(xi, j)) * std::conj(f(std::ldexp(xi + static_cast<double>(q), j)));
  return s;
}

// sup of |t_q| over a midpoint grid on [-R, R).
inline double grid_tq(const Fn& f, long q, double radius, int log_step = 12, int depth = 20) {
  const double h = std::ldexp(1.0, -log_step);
  double worst = 0.0;
  for (double x = -radius + h / 2; x < radius; x += h) worst = std::max(worst, std::abs(pointwise_tq(f, q, x, depth)));
  return worst;
}

// ∫ |f|² by the midpoint rule.
inline double grid_norm_sq(const Fn& f, double radius, int log_step = 12) {
  const double h = std::ldexp(1.0, -log_step);
  double s = 0.0;
  for (double x = -radius + h / 2; x < radius; x += h) s += std::norm(f(x)) * h;
  return s;
}

// Π_{j=1}^{depth} |m(2^{-j} ξ)|.
inline double truncated_product(const std::function<double(double)>& m_abs, double xi, int depth = 20) {
  double p = 1.0;
  for (int j = 1; j <= depth; ++j) p *= m_abs(std::ldexp(xi, -j));
  return p;
}

// Σ_k |f(ξ + k)|² for ξ in [0,1), over |k| ≤ K.
inline double periodized_sq(const Fn& f, double xi, int K = 64) {
  double s = 0.0;
  for (int k = -K; k <= K; ++k) s += std::norm(f(xi + k));
  return s;
}

}  // namespace oracle
