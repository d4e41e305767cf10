#pragma once

// Exact dyadic rationals and finite unions of half-open intervals on the
// line and on the torus [0,1).

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frameforge {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for malformed or out-of-contract inputs (CLI exit code 2).
struct input_error : error {
  using error::error;
};

/// num / 2^exp in lowest terms (exp > 0 implies num odd).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t n) : num_(n), exp_(0) {}  // NOLINT: integers are dyadic
  Dyadic(std::int64_t n, int e) : num_(n), exp_(e) {
    if (e < 0) throw input_error("dyadic exponent must be non-negative");
    if (e > kMaxExp) throw error("dyadic exponent too large");
    normalize();
  }

  static Dyadic pow2(int j) {
    if (j >= 0) return Dyadic(std::int64_t{1} << j);
    return Dyadic(1, -j);
  }

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }

  double to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

  bool is_integer() const { return exp_ == 0; }

  Dyadic floor() const {
    if (exp_ == 0) return *this;
    return Dyadic(num_ >> exp_);  // arithmetic shift rounds toward -inf
  }
  Dyadic frac() const { return *this - floor(); }

  /// Exact multiplication by 2^j.
  Dyadic scaled(int j) const {
    if (num_ == 0) return {};
    if (j <= 0) return Dyadic(num_, exp_ - j);
    if (exp_ >= j) return Dyadic(num_, exp_ - j);
    return from_wide(static_cast<__int128>(num_) << (j - exp_), 0);
  }

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
    int e = std::max(x.exp_, y.exp_);
    __int128 a = static_cast<__int128>(x.num_) << (e - x.exp_);
    __int128 b = static_cast<__int128>(y.num_) << (e - y.exp_);
    return from_wide(a + b, e);
  }
  friend Dyadic operator-(const Dyadic& x) { return Dyadic(-x.num_, x.exp_); }
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.num_, x.exp_ + y.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
    int e = std::max(x.exp_, y.exp_);
    __int128 a = static_cast<__int128>(x.num_) << (e - x.exp_);
    __int128 b = static_cast<__int128>(y.num_) << (e - y.exp_);
    return a <=> b;
  }
  friend bool operator==(const Dyadic& x, const Dyadic& y) = default;

  std::string str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
  }

  static constexpr int kMaxExp = 60;

 private:
  static Dyadic from_wide(__int128 n, int e) {
    while (e > 0 && (n & 1) == 0) {
      n >>= 1;
      --e;
    }
    if (n == 0) return {};
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
      throw error("dyadic numerator overflow");
    if (e > kMaxExp) throw error("dyadic exponent too large");
    Dyadic d;
    d.num_ = static_cast<std::int64_t>(n);
    d.exp_ = e;
    return d;
  }

  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ /= 2;
      --exp_;
    }
  }

  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline Dyadic half() { return Dyadic(1, 1); }

struct Interval {
  Dyadic a, b;
  Dyadic length() const { return b - a; }
  bool contains(const Dyadic& x) const { return a <= x && x < b; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// Sorts, drops empties and merges overlapping or touching intervals.
inline std::vector<Interval> canonical(std::vector<Interval> v) {
  std::erase_if(v, [](const Interval& i) { return !(i.a < i.b); });
  std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  std::vector<Interval> out;
  for (const auto& i : v) {
    if (!out.empty() && i.a <= out.back().b) {
      if (out.back().b < i.b) out.back().b = i.b;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

inline std::vector<Interval> intersect(const std::vector<Interval>& x, const std::vector<Interval>& y) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    Dyadic lo = std::max(x[i].a, y[j].a);
    Dyadic hi = std::min(x[i].b, y[j].b);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].b < y[j].b)
      ++i;
    else
      ++j;
  }
  return out;
}

inline std::vector<Interval> complement(const std::vector<Interval>& x, const Dyadic& lo, const Dyadic& hi) {
  std::vector<Interval> out;
  Dyadic cur = lo;
  for (const auto& i : x) {
    if (cur < i.a) out.push_back({cur, std::min(i.a, hi)});
    if (cur < i.b) cur = i.b;
  }
  if (cur < hi) out.push_back({cur, hi});
  return canonical(out);
}

inline Dyadic measure(const std::vector<Interval>& x) {
  Dyadic m;
  for (const auto& i : x) m += i.length();
  return m;
}

inline bool contains(const std::vector<Interval>& x, const Dyadic& p) {
  auto it = std::upper_bound(x.begin(), x.end(), p, [](const Dyadic& v, const Interval& i) { return v < i.a; });
  if (it == x.begin()) return false;
  return std::prev(it)->contains(p);
}

// Translate [a,b) into [0,1) modulo 1, splitting where it wraps.
inline void wrap_into(std::vector<Interval>& out, const Interval& i) {
  if (!(i.a < i.b)) return;
  if (Dyadic(1) <= i.length()) {
    out.push_back({Dyadic(0), Dyadic(1)});
    return;
  }
  Dyadic shift = i.a.floor();
  Dyadic a = i.a - shift, b = i.b - shift;
  if (b <= Dyadic(1)) {
    out.push_back({a, b});
  } else {
    out.push_back({a, Dyadic(1)});
    out.push_back({Dyadic(0), b - Dyadic(1)});
  }
}

}  // namespace detail

class PeriodicSet;

/// Finite union of [a,b) inside the window [-2^W, 2^W).
class LineSet {
 public:
  LineSet() = default;
  explicit LineSet(int window_exp, std::vector<Interval> iv = {}) : window_exp_(window_exp) {
    if (window_exp < 0 || window_exp > 30) throw input_error("window_exp out of range");
    iv_ = detail::canonical(std::move(iv));
    for (const auto& i : iv_)
      if (i.a < lo() || hi() < i.b) throw error("interval [" + i.a.str() + "," + i.b.str() + ") escapes window");
  }

  static LineSet window(int w) { return LineSet(w, {{-Dyadic::pow2(w), Dyadic::pow2(w)}}); }
  /// [a,b) together with its mirror image [-b,-a).
  static LineSet symmetric(int w, const Dyadic& a, const Dyadic& b) { return LineSet(w, {{a, b}, {-b, -a}}); }

  int window_exp() const { return window_exp_; }
  Dyadic lo() const { return -Dyadic::pow2(window_exp_); }
  Dyadic hi() const { return Dyadic::pow2(window_exp_); }
  const std::vector<Interval>& intervals() const& { return iv_; }
  std::vector<Interval> intervals() && { return std::move(iv_); }
  bool empty() const { return iv_.empty(); }
  Dyadic measure() const { return detail::measure(iv_); }
  bool contains(const Dyadic& x) const { return detail::contains(iv_, x); }

  friend bool operator==(const LineSet&, const LineSet&) = default;

 private:
  int window_exp_ = 4;
  std::vector<Interval> iv_;
};

/// Finite union of [a,b) inside [0,1), read as a Z-periodic subset of R.
class PeriodicSet {
 public:
  PeriodicSet() = default;
  explicit PeriodicSet(std::vector<Interval> iv) {
    iv_ = detail::canonical(std::move(iv));
    for (const auto& i : iv_)
      if (i.a < Dyadic(0) || Dyadic(1) < i.b) throw input_error("periodic interval outside [0,1)");
  }
  static PeriodicSet full() { return PeriodicSet({{Dyadic(0), Dyadic(1)}}); }

  const std::vector<Interval>& intervals() const& { return iv_; }
  std::vector<Interval> intervals() && { return std::move(iv_); }
  bool empty() const { return iv_.empty(); }
  Dyadic measure() const { return detail::measure(iv_); }
  bool contains(const Dyadic& x) const { return detail::contains(iv_, x.frac()); }

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  std::vector<Interval> iv_;
};

namespace detail {
inline void same_window(const LineSet& a, const LineSet& b) {
  if (a.window_exp() != b.window_exp())
    throw error("window mismatch: " + std::to_string(a.window_exp()) + " vs " + std::to_string(b.window_exp()));
}
}  // namespace detail

inline LineSet set_union(const LineSet& a, const LineSet& b) {
  detail::same_window(a, b);
  auto v = a.intervals();
  v.insert(v.end(), b.intervals().begin(), b.intervals().end());
  return LineSet(a.window_exp(), std::move(v));
}
inline LineSet intersect(const LineSet& a, const LineSet& b) {
  detail::same_window(a, b);
  return LineSet(a.window_exp(), detail::intersect(a.intervals(), b.intervals()));
}
inline LineSet complement_in_window(const LineSet& a) {
  return LineSet(a.window_exp(), detail::complement(a.intervals(), a.lo(), a.hi()));
}
inline LineSet set_difference(const LineSet& a, const LineSet& b) { return intersect(a, complement_in_window(b)); }
inline bool is_subset(const LineSet& a, const LineSet& b) { return set_difference(a, b).empty(); }

/// 2^j * A; throws if the image leaves the window.
inline LineSet dilate(const LineSet& a, int j) {
  std::vector<Interval> v;
  for (const auto& i : a.intervals()) v.push_back({i.a.scaled(j), i.b.scaled(j)});
  return LineSet(a.window_exp(), std::move(v));
}

/// 2^j * A intersected with the window (no error on escape).
inline LineSet dilate_clipped(const LineSet& a, int j) {
  std::vector<Interval> v;
  for (const auto& i : a.intervals()) v.push_back({std::max(i.a.scaled(j), a.lo()), std::min(i.b.scaled(j), a.hi())});
  return LineSet(a.window_exp(), std::move(v));
}

inline LineSet translate(const LineSet& a, const Dyadic& q) {
  std::vector<Interval> v;
  for (const auto& i : a.intervals()) v.push_back({i.a + q, i.b + q});
  return LineSet(a.window_exp(), std::move(v));
}

/// (A + Z) ∩ [0,1).
inline PeriodicSet periodize(const LineSet& a) {
  std::vector<Interval> v;
  for (const auto& i : a.intervals()) detail::wrap_into(v, i);
  return PeriodicSet(std::move(v));
}

/// The Z-periodic extension of S restricted to the window.
inline LineSet lift(const PeriodicSet& s, int window_exp) {
  std::vector<Interval> v;
  const std::int64_t n = std::int64_t{1} << window_exp;
  for (std::int64_t k = -n; k < n; ++k)
    for (const auto& i : s.intervals()) v.push_back({i.a + Dyadic(k), i.b + Dyadic(k)});
  return LineSet(window_exp, std::move(v));
}

inline PeriodicSet shift_mod1(const PeriodicSet& s, const Dyadic& t) {
  std::vector<Interval> v;
  for (const auto& i : s.intervals()) detail::wrap_into(v, {i.a + t, i.b + t});
  return PeriodicSet(std::move(v));
}

inline PeriodicSet set_union(const PeriodicSet& a, const PeriodicSet& b) {
  auto v = a.intervals();
  v.insert(v.end(), b.intervals().begin(), b.intervals().end());
  return PeriodicSet(std::move(v));
}
inline PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b) {
  return PeriodicSet(detail::intersect(a.intervals(), b.intervals()));
}
inline PeriodicSet complement(const PeriodicSet& a) {
  return PeriodicSet(detail::complement(a.intervals(), Dyadic(0), Dyadic(1)));
}
inline PeriodicSet set_difference(const PeriodicSet& a, const PeriodicSet& b) { return intersect(a, complement(b)); }
inline bool is_subset(const PeriodicSet& a, const PeriodicSet& b) { return set_difference(a, b).empty(); }

/// S ∪ (S + 1/2) mod 1.
inline PeriodicSet half_shift_closure(const PeriodicSet& s) { return set_union(s, shift_mod1(s, half())); }

/// {ξ : 2ξ mod 1 ∈ S}, i.e. S/2 + Z/2.
inline PeriodicSet halve_mod1(const PeriodicSet& s) {
  std::vector<Interval> v;
  for (const auto& i : s.intervals()) {
    Interval h{i.a.scaled(-1), i.b.scaled(-1)};
    v.push_back(h);
    v.push_back({h.a + half(), h.b + half()});
  }
  return PeriodicSet(std::move(v));
}

/// {2ξ mod 1 : ξ ∈ S}.
inline PeriodicSet double_mod1(const PeriodicSet& s) {
  std::vector<Interval> v;
  for (const auto& i : s.intervals()) detail::wrap_into(v, {i.a.scaled(1), i.b.scaled(1)});
  return PeriodicSet(std::move(v));
}

/// Largest r with (-r,0) ∪ (0,r) ⊆ A (mod Z when periodic); 0 if none.
inline Dyadic punctured_radius(const LineSet& a) {
  Dyadic right, left;
  for (const auto& i : a.intervals()) {
    if (i.a <= Dyadic(0) && Dyadic(0) < i.b) right = i.b;
    if (i.a < Dyadic(0) && Dyadic(0) <= i.b) left = -i.a;
  }
  // Pieces [x,0) and [0,y) are merged by canonical form, so one interval covers both sides when present.
  return std::min(left, right);
}

inline Dyadic punctured_radius(const PeriodicSet& s) {
  Dyadic right, left;
  for (const auto& i : s.intervals()) {
    if (i.a == Dyadic(0)) right = i.b;
    if (i.b == Dyadic(1)) left = Dyadic(1) - i.a;
  }
  return std::min(left, right);
}

/// Folds A∖{0} onto the fundamental octaves: returns (positive, negative) parts as subsets of [1,2),
/// the negative side reflected. A piece reaching 0 covers its whole octave.
inline std::pair<std::vector<Interval>, std::vector<Interval>> fold_octaves(const std::vector<Interval>& a) {
  std::vector<Interval> pos, neg;
  auto fold_side = [](std::vector<Interval>& out, Dyadic lo, Dyadic hi) {
    if (!(lo < hi)) return;
    if (lo == Dyadic(0)) {
      out.push_back({Dyadic(1), Dyadic(2)});
      return;
    }
    // octave k with 2^k <= lo
    int k = 0;
    while (lo < Dyadic::pow2(k)) --k;
    while (Dyadic::pow2(k + 1) <= lo) ++k;
    for (; Dyadic::pow2(k) < hi; ++k) {
      Dyadic s = std::max(lo, Dyadic::pow2(k)), e = std::min(hi, Dyadic::pow2(k + 1));
      if (s < e) out.push_back({s.scaled(-k), e.scaled(-k)});
    }
  };
  for (const auto& i : a) {
    if (Dyadic(0) < i.b) fold_side(pos, std::max(i.a, Dyadic(0)), i.b);
    if (i.a < Dyadic(0)) fold_side(neg, std::max(-i.b, Dyadic(0)), -i.a);
  }
  return {detail::canonical(pos), detail::canonical(neg)};
}

/// True when the dyadic dilates of A cover R∖{0}.
inline bool covers_by_dilation(const LineSet& a) {
  auto [p, n] = fold_octaves(a.intervals());
  const std::vector<Interval> octave{{Dyadic(1), Dyadic(2)}};
  return p == octave && n == octave;
}

}  // namespace frameforge
