#include <catch_amalgamated.hpp>

#include "frameforge/catalog.hpp"
#include "frameforge/naimark.hpp"
#include "frameforge/wavelet.hpp"
#include "oracles.hpp"

using namespace frameforge;
using Catch::Matchers::WithinAbs;

namespace {
const StepFunction shannon = catalog("shannon");
const StepFunction phi1 = catalog("phi_quarter");
const PeriodicSet quarter_set({{Dyadic(0), Dyadic(1, 2)}, {Dyadic(3, 2), Dyadic(1)}});

bool in(double t, double a, double b) { return a <= t && t < b; }

// |m0*| for the quarter pair with the default choices, written out by hand.
double m0_star_abs(double x) {
  double t = x - std::floor(x);
  if (in(t, 0, 0.125) || in(t, 0.875, 1)) return 1.0;
  if (in(t, 0.375, 0.625)) return 0.0;
  return (1 / std::numbers::sqrt2);
}

Maximalization quarter_star() { return maximalize(is_scaling(phi1)); }
}  // namespace

TEST_CASE("maximality") {
  CHECK(is_maximal(shannon).maximal);
  MaximalityReport r = is_maximal(phi1);
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness);
  CHECK(*r.witness == Interval{Dyadic(1, 2), Dyadic(3, 2)});
  CHECK_THROWS_AS(is_maximal(StepFunction::zero(4)), input_error);
}

TEST_CASE("projection") {
  CHECK(project(shannon, quarter_set) == phi1);
  CHECK(project(shannon, PeriodicSet::full()) == shannon);
  CHECK_THROWS_AS(project(shannon, PeriodicSet(std::vector<Interval>{})), error);
}

TEST_CASE("projection conditions on the Shannon pair") {
  PeriodicStepFunction m0 = extract_lowpass(shannon);

  ProjectionConditions a = check_projection_conditions(shannon, m0, quarter_set);
  CHECK(a.all());
  CHECK(a.window_sufficient);
  CHECK(is_scaling(project(shannon, quarter_set)).all());

  CHECK(check_projection_conditions(shannon, m0, PeriodicSet::full()).all());

  // C = ±[3/8,1/2) stays away from 0.
  ProjectionConditions b = check_projection_conditions(shannon, m0, PeriodicSet({{Dyadic(3, 3), Dyadic(5, 3)}}));
  CHECK_FALSE(b.cond1);
  REQUIRE(b.cond1_witness);
  CHECK_FALSE(b.all());
  CHECK_FALSE(is_scaling(project(shannon, PeriodicSet({{Dyadic(3, 3), Dyadic(5, 3)}}))).all());

  // Conditions 1-3 hold but C/2 is not inside C.
  PeriodicSet e({{Dyadic(0), Dyadic(1, 3)}, {Dyadic(1, 2), Dyadic(3, 3)}, {Dyadic(7, 3), Dyadic(1)}});
  ProjectionConditions c = check_projection_conditions(shannon, m0, e);
  CHECK(c.cond1);
  CHECK(c.cond2);
  CHECK(c.cond3);
  CHECK_FALSE(c.reductive);
  CHECK_FALSE(c.all());
  CHECK_FALSE(is_scaling(project(shannon, e)).all());
}

TEST_CASE("maximalization of the quarter pair") {
  Maximalization m = quarter_star();
  CHECK_FALSE(m.unchanged);
  for (std::int64_t k = 0; k < 1024; ++k) {
    double x = (k + 0.5) / 1024;
    CHECK(std::abs(std::abs(oracle::eval(m.m0_star, x)) - m0_star_abs(x)) < 1e-12);
  }
  auto f = oracle::fn(m.phi_star);
  const double h = std::ldexp(1.0, -8);
  double worst = 0.0;
  for (double x = -16 + h / 2; x < 16; x += h)
    worst = std::max(worst, std::abs(std::abs(f(x)) - oracle::truncated_product(m0_star_abs, x, 40)));
  CHECK(worst < 1e-12);

  CHECK(m.phi_star(Dyadic(0)) == cplx(1.0));
  CHECK_THAT(std::abs(m.phi_star(Dyadic(3, 3))), WithinAbs((1 / std::numbers::sqrt2), 1e-15));
  CHECK(m.phi_star(-Dyadic(5, 3)) == cplx(0.5));
  CHECK(m.phi_star(Dyadic(1)) == cplx(0.0));

  CHECK(is_maximal(m.phi_star).maximal);
  CHECK(project(m.phi_star, quarter_set) == phi1);
  CHECK(m.tail_bound == 0.0078125);
  CHECK(check_S3(m.m0_star, PeriodicSet::full()).ok);
}

TEST_CASE("maximalization leaves a maximal function alone") {
  Maximalization m = maximalize(is_scaling(shannon));
  CHECK(m.unchanged);
  CHECK(m.phi_star == shannon);
}

TEST_CASE("maximalization input checks") {
  MaximalizationChoices ch;
  ch.pair = {Amp(1.0), Amp(1.0)};
  CHECK_THROWS_AS(maximalize(is_scaling(phi1), ch), input_error);
  ch.pair = {Amp(1.0), Amp(0.0)};
  CHECK_THROWS_AS(maximalize(is_scaling(phi1), ch), input_error);
  StepFunction bogus = StepFunction::indicator(LineSet(4, {{Dyadic(1), Dyadic(2)}}));
  CHECK_THROWS_AS(maximalize(is_scaling(bogus)), input_error);
}

TEST_CASE("semiorthogonalization") {
  Maximalization m = quarter_star();
  StepFunction theta = semiorthogonalize(m.phi_star, weight(m.phi_star));
  PeriodicStepFunction p = weight(theta);
  for (const auto& q : p.pieces()) CHECK(std::abs(q.v.value() - 1.0) < 1e-12);
  CHECK(p.domain() == PeriodicSet::full());

  CHECK(semiorthogonalize(phi1, D_psi(catalog("psi1"))) == phi1);
  CHECK_THROWS_AS(semiorthogonalize(m.phi_star, PeriodicStepFunction::constant(0.0)), error);
  CHECK_THROWS_AS(semiorthogonalize(phi1, PeriodicStepFunction::constant(-1.0)), input_error);
}
