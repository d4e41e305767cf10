#include <catch_amalgamated.hpp>

#include "frameforge/catalog.hpp"
#include "frameforge/filterbank.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frameforge;
using Catch::Matchers::WithinAbs;

namespace {
const StepFunction shannon = catalog("shannon");
const StepFunction phi1 = catalog("phi_quarter");

// Largest entry of M M* - I on a grid of [0,1), with M built pointwise from the two filters.
double unitarity_gap(const PeriodicStepFunction& m0, const PeriodicStepFunction& m1) {
  double worst = 0.0;
  const double h = 1.0 / 1024;
  for (double x = h / 2; x < 1.0; x += h) {
    oracle::cplx a = oracle::eval(m0, x), b = oracle::eval(m0, x + 0.5);
    oracle::cplx c = oracle::eval(m1, x), d = oracle::eval(m1, x + 0.5);
    worst = std::max({worst, std::abs(std::norm(a) + std::norm(b) - 1.0), std::abs(std::norm(c) + std::norm(d) - 1.0),
                      std::abs(a * std::conj(c) + b * std::conj(d))});
  }
  return worst;
}
}  // namespace

TEST_CASE("extension is the identity when S is half-shift invariant") {
  PeriodicStepFunction m = extract_lowpass(shannon);
  CHECK(extend_lowpass(m) == m);
}

TEST_CASE("extension of the quarter filter") {
  PeriodicStepFunction m = extend_lowpass(extract_lowpass(phi1));
  CHECK(m.domain() == PeriodicSet::full());
  // (S + 1/2)∖S = [1/4,3/4): partner m0(ξ+1/2) is 1 on [3/8,5/8) and 0 elsewhere there.
  CHECK(m.coefficient(Dyadic(1, 2)).abs() == 1.0);
  CHECK(m.coefficient(half()).abs() == 0.0);
  CHECK(check_S3(m, PeriodicSet::full()).ok);

  PeriodicStepFunction flipped = extend_lowpass(extract_lowpass(phi1), PeriodicStepFunction::constant(-1.0));
  CHECK(modulus(flipped) == modulus(m));
  CHECK(flipped.coefficient(Dyadic(5, 4)) == -m.coefficient(Dyadic(5, 4)));
  CHECK(check_S3(flipped, PeriodicSet::full()).ok);
}

TEST_CASE("high-pass filter of the Shannon pair") {
  PeriodicStepFunction m0 = extract_lowpass(shannon);
  PeriodicStepFunction m1 = make_highpass(m0);
  CHECK(modulus(m1).support() == PeriodicSet({{Dyadic(1, 2), Dyadic(3, 2)}}));
  for (std::int64_t k = 0; k < 1024; k += 7) {
    Dyadic x(2 * k + 1, 11);
    double xd = x.to_double();
    oracle::cplx want = std::polar(1.0, 2 * std::numbers::pi * xd) * std::conj(oracle::eval(m0, xd + 0.5));
    CHECK(std::abs(m1(x) - want) < 1e-12);
  }
}

TEST_CASE("unitarity of completed banks") {
  FilterBank s = complete_bank(extract_lowpass(shannon), PeriodicStepFunction::constant(1.0),
                               PeriodicStepFunction::constant(1.0));
  Check cs = check_FP(s);
  CHECK(cs.ok);
  CHECK(cs.max_defect == 0.0);
  CHECK(unitarity_gap(s.m0, s.m1) < 1e-12);

  FilterBank q = complete_bank(extract_lowpass(phi1), PeriodicStepFunction::constant(1.0),
                               PeriodicStepFunction::constant(1.0));
  CHECK(check_FP(q).ok);
  CHECK(unitarity_gap(q.m0, q.m1) < 1e-12);
}

TEST_CASE("unimodular mu1 does not change the verdict") {
  gen::Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    FilterBank b = complete_bank(extract_lowpass(phi1), gen::random_phase(rng, 3), gen::random_phase(rng, 3));
    CHECK(check_FP(b).ok);
    CHECK(unitarity_gap(b.m0, b.m1) < 1e-12);
  }
}

TEST_CASE("a constant low-pass filter cannot be completed") {
  PeriodicStepFunction one = PeriodicStepFunction::constant(1.0);
  PeriodicStepFunction m1 = make_highpass(one);
  Check c = check_FP(one, m1, PeriodicSet::full());
  CHECK_FALSE(c.ok);
  CHECK(c.max_defect == 1.0);  // |m0(ξ)|² + |m0(ξ+½)|² = 2
  REQUIRE_FALSE(c.witnesses.empty());
  CHECK(c.witnesses.front().label == "FP:row0");
}

TEST_CASE("a corrupted high-pass piece is located") {
  FilterBank s = complete_bank(extract_lowpass(shannon), PeriodicStepFunction::constant(1.0),
                               PeriodicStepFunction::constant(1.0));
  Pieces p = s.m1.pieces();
  auto it = std::find_if(p.begin(), p.end(), [](const Piece& q) { return !q.v.is_zero(); });
  REQUIRE(it != p.end());
  Interval hit = it->iv;
  it->v = it->v * Amp(1.1);
  PeriodicStepFunction bad(p, s.m1.char_exp());
  Check c = check_FP(s.m0, bad, PeriodicSet::full());
  CHECK_FALSE(c.ok);
  CHECK_THAT(c.max_defect, WithinAbs(0.21, 1e-12));
  REQUIRE_FALSE(c.witnesses.empty());
  Dyadic w = c.witnesses.front().where.a;
  CHECK((hit.contains(w) || hit.contains((w + half()).frac())));  // the row at ξ uses m1(ξ) and m1(ξ+½)
  CHECK_THAT(unitarity_gap(s.m0, bad), WithinAbs(0.21, 1e-12));
}

TEST_CASE("low-pass class membership") {
  PeriodicStepFunction ms = extract_lowpass(shannon);
  LPReport r = check_LP(ms, support_sets(shannon).C);
  CHECK(r.all());
  CHECK(check_LP(extract_lowpass(phi1), support_sets(phi1).C).all());
  LPReport z = check_LP(PeriodicStepFunction::constant(0.0), support_sets(shannon).C);
  CHECK_FALSE(z.lp1.ok);
}
