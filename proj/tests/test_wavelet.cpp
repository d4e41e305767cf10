#include <catch_amalgamated.hpp>

#include "frameforge/catalog.hpp"
#include "frameforge/wavelet.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace frameforge;
using Catch::Matchers::WithinAbs;

namespace {
const StepFunction shannon = catalog("shannon");
const StepFunction phi1 = catalog("phi_quarter");
const StepFunction psi0 = catalog("psi0");
const StepFunction psi1 = catalog("psi1");

StepFunction ind(std::vector<Interval> v) { return StepFunction::indicator(LineSet(4, std::move(v))); }

bool in(double t, double a, double b) { return a <= t && t < b; }

// Hand-written completed low-pass filters (fundamental-domain values).
double m0_shannon(double x) {
  double t = x - std::floor(x);
  return in(t, 0, 0.25) || in(t, 0.75, 1) ? 1.0 : 0.0;
}
double m0_quarter_extended(double x) {
  double t = x - std::floor(x);
  return in(t, 0, 0.125) || in(t, 0.25, 0.375) || in(t, 0.625, 0.75) || in(t, 0.875, 1) ? 1.0 : 0.0;
}

// ψ̂(ξ) = e^{πiξ}·conj m0(ξ/2 + 1/2)·φ̂(ξ/2).
double synthesis_gap(const StepFunction& psi, const std::function<double(double)>& m0, const StepFunction& phi) {
  auto f = oracle::fn(phi), g = oracle::fn(psi);
  double worst = 0.0;
  const double h = std::ldexp(1.0, -10);
  for (double x = -16 + h / 2; x < 16; x += h) {
    oracle::cplx want = std::polar(1.0, std::numbers::pi * x) * m0(x / 2 + 0.5) * f(x / 2);
    worst = std::max(worst, std::abs(g(x) - want));
  }
  return worst;
}

FilterBank bank_of(const StepFunction& phi) { return complete_bank(extract_lowpass(phi), PeriodicStepFunction::constant(1.0), PeriodicStepFunction::constant(1.0)); }
}  // namespace

TEST_CASE("synthesis from the Shannon and quarter pairs") {
  StepFunction a = synthesize(shannon, bank_of(shannon).m1);
  CHECK(modulus(a) == psi0);
  CHECK(synthesis_gap(a, m0_shannon, shannon) < 1e-12);

  StepFunction b = synthesize(phi1, bank_of(phi1).m1);
  CHECK(modulus(b) == psi1);
  CHECK(synthesis_gap(b, m0_quarter_extended, phi1) < 1e-12);

  PeriodicStepFunction zero = PeriodicStepFunction::constant(0.0);
  CHECK_THROWS_AS(synthesize(shannon, zero), error);
}

TEST_CASE("octave sums") {
  CHECK(calderon_deviation(psi0).value == 0.0);
  CHECK(calderon_deviation(psi1).value == 0.0);
  CHECK(oracle::grid_calderon(oracle::fn(psi0)) <= 1e-9);
  CHECK(oracle::grid_calderon(oracle::fn(psi1)) <= 1e-9);
  CHECK(calderon_deviation(scale(psi0, Amp::inv_sqrt2())).value == 0.5);
  CHECK_THROWS_AS(calderon_deviation(shannon), input_error);

  gen::Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    StepFunction f = gen::random_annular(rng, 4, Dyadic(1, 2), Dyadic(4), 2);
    CHECK_THAT(calderon_deviation(f).value, WithinAbs(oracle::grid_calderon(oracle::fn(f)), 1e-9));
  }
}

TEST_CASE("t_q vanishes pointwise for the examples") {
  for (const auto* psi : {&psi0, &psi1})
    for (std::int64_t q = -9; q <= 9; q += 2) {
      CHECK(t_q(*psi, q).max_abs == 0.0);
      CHECK(oracle::grid_tq(oracle::fn(*psi), q, 4.0, 10) == 0.0);
    }
}

TEST_CASE("t_q control cases") {
  TqValue v = t_q(ind({{Dyadic(-1), Dyadic(1)}}), 1);
  CHECK(v.max_abs == 1.0);
  REQUIRE(v.witness);
  CHECK(Dyadic(-1) <= v.witness->a);
  CHECK(v.witness->b <= Dyadic(0));

  // Length-1 support never meets its odd shift.
  StepFunction unit = ind({{Dyadic(0), Dyadic(1)}});
  CHECK(t_q_range(unit, 9).max_abs == 0.0);
}

TEST_CASE("t_q agrees with the pointwise oracle on random annular functions") {
  gen::Rng rng(8);
  for (int t = 0; t < 6; ++t) {
    StepFunction f = modulate(gen::random_annular(rng, 3, Dyadic(1, 2), Dyadic(2), 2), Dyadic(1, 2));
    auto F = oracle::fn(f);
    for (std::int64_t q : {-3, -1, 1, 3}) {
      StepFunction tq = t_q_function(f, q);
      for (double x = -7.9; x < 8; x += 0.173)
        CHECK(std::abs(oracle::eval(tq, x) - oracle::pointwise_tq(F, q, x)) < 1e-12);
    }
  }
}

TEST_CASE("Parseval verdicts and norms") {
  CHECK(is_parseval(psi0).ok);
  CHECK(is_parseval(psi1).ok);
  CHECK_FALSE(is_parseval(scale(psi0, 1.1)).ok);
  CHECK(norm_sq(psi0) == 1.0);
  CHECK(norm_sq(psi1) == 0.5);
}

TEST_CASE("telescoping against the scaling function") {
  for (const auto* phi : {&shannon, &phi1}) {
    StepFunction psi = synthesize(*phi, bank_of(*phi).m1);
    CHECK(telescoping_deviation(psi, *phi).first == 0.0);
    CHECK(add(D_psi(psi), scale(weight(*phi), -1.0)).support().empty());
  }
  auto [dev, where] = telescoping_deviation(psi1, shannon);
  CHECK(dev == 1.0);
  REQUIRE(where);
  Interval pos = Dyadic(0) <= where->a ? *where : Interval{-where->b, -where->a};
  CHECK(Dyadic(1, 2) <= pos.a);
  CHECK(pos.b <= half());
}

TEST_CASE("dimension functions") {
  CHECK(D_psi(psi0) == PeriodicStepFunction::constant(1.0));
  PeriodicStepFunction d1 = D_psi(psi1);
  CHECK(d1.support() == PeriodicSet({{Dyadic(0), Dyadic(1, 2)}, {Dyadic(3, 2), Dyadic(1)}}));
  CHECK(is_zero_one_valued(d1));
  CHECK(D_psi(StepFunction::zero(4)).support().empty());

  CHECK(dimension_function({shannon}) == PeriodicStepFunction::constant(1.0));
  CHECK(dimension_function({phi1}).support() == d1.support());
  CHECK(dimension_function({shannon, ind({{Dyadic(1), Dyadic(2)}})}) == PeriodicStepFunction::constant(2.0));
}

TEST_CASE("Parseval sums on test functions") {
  TestSum a = parseval_on_test(ind({{half(), Dyadic(1)}}), psi0);
  CHECK(a.range_complete);
  CHECK(a.deviation <= 1e-10);

  TestSum b = parseval_on_test(psi0, psi0);
  CHECK_THAT(b.sum, WithinAbs(1.0, 1e-12));
  CHECK(b.norm_sq == 1.0);

  StepFunction f = ind({{Dyadic(1), Dyadic(2)}});
  TestSum c = parseval_on_test(f, scale(psi0, 1.1));
  CHECK_THAT(c.deviation, WithinAbs(0.21 * c.norm_sq, 1e-10));

  gen::Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    StepFunction g = gen::random_annular(rng, 4, Dyadic(1, 2), Dyadic(4), 2);
    CHECK(parseval_on_test(g, psi1).deviation <= 1e-10 * norm_sq(g));
  }
}

TEST_CASE("semiorthogonality") {
  CHECK(semiorthogonality(psi0).ok);
  CHECK(semiorthogonality_evidence(psi0, 4, 8).ok);
  CHECK(semiorthogonality_evidence(psi1, 4, 8).ok);

  StepFunction bad = ind({{half(), Dyadic(3, 1)}});
  SemiorthogonalityReport r = semiorthogonality(bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 1);
  SemiorthogonalityEvidence e = semiorthogonality_evidence(bad, 3, 4);
  CHECK_FALSE(e.ok);
  REQUIRE(e.witness);
  // <ψ_{j,k}, ψ> by the midpoint rule
  auto [j, k] = *e.witness;
  auto F = oracle::fn(bad);
  const double h = std::ldexp(1.0, -14);
  oracle::cplx s = 0.0;
  for (double x = -4 + h / 2; x < 4; x += h) {
    double y = std::ldexp(x, -j);
    s += std::pow(2.0, -j / 2.0) * F(y) * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(k) * y) *
         std::conj(F(x)) * h;
  }
  CHECK(std::abs(cross_scale_inner(bad, j, k) - s) < 1e-6);
  CHECK(std::abs(s) > 1e-3);
}

TEST_CASE("trivial gauge leaves the wavelet alone") {
  PeriodicStepFunction one = PeriodicStepFunction::constant(1.0);
  CHECK(gauge_wavelet(psi0, one, one, one, PeriodicSet::full()) == psi0);
  PeriodicStepFunction minus = PeriodicStepFunction::constant(-1.0);
  CHECK_THROWS_AS(gauge_wavelet(psi0, one, one, minus, PeriodicSet::full()), input_error);
}
