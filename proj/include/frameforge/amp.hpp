#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "frameforge/dyadic.hpp"

namespace frameforge {

using cplx = std::complex<double>;

/// A complex value c * (sqrt2 ? √2 : 1). Keeping the √2 factor symbolic makes
/// products and squared moduli of values such as 1/√2 and 2^{j/2} exact.
struct Amp {
  cplx c{0.0, 0.0};
  bool sqrt2 = false;

  Amp() = default;
  Amp(cplx v, bool r = false) : c(v), sqrt2(r) {}  // NOLINT
  Amp(double v) : c(v, 0.0) {}                     // NOLINT

  static Amp inv_sqrt2() { return {0.5, true}; }
  /// 2^{j/2}
  static Amp half_power(int j) {
    int q = j >= 0 ? j / 2 : -((-j + 1) / 2);  // floor(j/2)
    return {std::ldexp(1.0, q), (j - 2 * q) == 1};
  }

  cplx value() const { return sqrt2 ? c * std::numbers::sqrt2 : c; }
  double abs_sq() const { return std::norm(c) * (sqrt2 ? 2.0 : 1.0); }
  double abs() const { return std::sqrt(abs_sq()); }
  Amp modulus() const { return {std::abs(c), sqrt2}; }
  Amp conj() const { return {std::conj(c), sqrt2}; }
  bool is_zero() const { return c == cplx{}; }

  friend Amp operator*(const Amp& x, const Amp& y) {
    if (x.sqrt2 && y.sqrt2) return {x.c * y.c * 2.0, false};
    return {x.c * y.c, x.sqrt2 || y.sqrt2};
  }
  friend Amp operator+(const Amp& x, const Amp& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.sqrt2 == y.sqrt2) return {x.c + y.c, x.sqrt2};
    return {x.value() + y.value(), false};
  }
  friend Amp operator-(const Amp& x) { return {-x.c, x.sqrt2}; }
  friend Amp operator-(const Amp& x, const Amp& y) { return x + (-y); }
  Amp inverse() const {
    if (sqrt2) return {1.0 / (2.0 * c), true};
    return {1.0 / c, false};
  }
  friend Amp operator/(const Amp& x, const Amp& y) { return x * y.inverse(); }

  /// Exact representational equality.
  friend bool operator==(const Amp&, const Amp&) = default;
};

inline bool near(const Amp& x, const Amp& y, double tol) { return std::abs(x.value() - y.value()) <= tol; }

/// √x for x ≥ 0 (negatives from rounding clamp to 0), kept exact when x or 2x is a perfect square.
inline Amp sqrt_exact(double x) {
  if (x <= 0.0) return Amp{};
  double s = std::sqrt(x);
  if (s * s == x) return {s, false};
  double t = std::sqrt(2.0 * x);
  if (t * t == 2.0 * x) return {t / 2.0, true};
  return {s, false};
}

/// √(1 - |v|²), clamped to [0,1].
inline Amp complementary(const Amp& v) {
  double r = 1.0 - v.abs_sq();
  if (r < 0.0) r = 0.0;
  if (r > 1.0) r = 1.0;
  return sqrt_exact(r);
}

/// e^{2πi t} with t reduced exactly mod 1; quarter turns are exact.
inline cplx cis(const Dyadic& t) {
  Dyadic r = t.frac();
  if (r == Dyadic(0)) return {1.0, 0.0};
  if (r == Dyadic(1, 2)) return {0.0, 1.0};
  if (r == Dyadic(1, 1)) return {-1.0, 0.0};
  if (r == Dyadic(3, 2)) return {0.0, -1.0};
  double a = 2.0 * std::numbers::pi * r.to_double();
  return {std::cos(a), std::sin(a)};
}

// Values below this modulus are treated as exact zeros (rounding residue of 1 - |u|² etc).
inline constexpr double kZeroSnap = 1e-14;

inline Amp snap(const Amp& v) { return v.abs() < kZeroSnap ? Amp{} : v; }

}  // namespace frameforge
