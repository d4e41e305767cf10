// Walk from a maximal scaling function down to a non-maximal one and back,
// printing what each step produces.

#include <cstdio>
#include <string>

#include "frameforge/frameforge.hpp"

using namespace frameforge;

namespace {

void show(const char* label, const StepFunction& f) {
  std::printf("%s\n", label);
  for (const auto& q : f.pieces()) {
    cplx v = q.v.value();
    std::printf("  [%s, %s)  %.6f%+.6fi\n", q.iv.a.str().c_str(), q.iv.b.str().c_str(), v.real(), v.imag());
  }
}

void show(const char* label, const PeriodicSet& s) {
  std::printf("%s", label);
  for (const auto& i : s.intervals()) std::printf(" [%s, %s)", i.a.str().c_str(), i.b.str().c_str());
  std::printf("\n");
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main() {
  StepFunction shannon = catalog("shannon");
  PeriodicStepFunction m0 = extract_lowpass(shannon);
  std::printf("Shannon scaling function: maximal %s, scaling %s\n\n", yes(is_maximal(shannon).maximal),
              yes(is_scaling(shannon).all()));

  PeriodicSet e({{Dyadic(0), Dyadic(1, 2)}, {Dyadic(3, 2), Dyadic(1)}});
  show("projection set E:", e);
  ProjectionConditions pc = check_projection_conditions(shannon, m0, e);
  std::printf("conditions: C/2 in C %s, punctured neighbourhood %s, filter modulus %s, disjoint fringe %s\n",
              yes(pc.reductive), yes(pc.cond1), yes(pc.cond2), yes(pc.cond3));
  StepFunction phi = project(shannon, e);
  ScalingPair pair = is_scaling(phi);
  show("projected function:", phi);
  std::printf("scaling %s, maximal %s\n\n", yes(pair.all()), yes(is_maximal(phi).maximal));

  Maximalization m = maximalize(pair);
  show("maximal extension:", m.phi_star);
  std::printf("maximal %s, scaling %s, restriction gives the projected function back %s, tail bound %g\n\n",
              yes(is_maximal(m.phi_star).maximal), yes(is_scaling(m.phi_star).all()),
              yes(project(m.phi_star, pair.S) == phi), m.tail_bound);

  FilterBank bank = complete_bank(extend_lowpass(*pair.m0), PeriodicStepFunction::constant(1.0),
                                  PeriodicStepFunction::constant(1.0));
  StepFunction psi = synthesize(phi, bank.m1);
  ParsevalReport r = is_parseval(psi);
  show("wavelet from the projected pair (modulus):", modulus(psi));
  std::printf("octave sum deviation %g, largest |t_q| %g, Parseval %s, norm^2 %g\n", r.calderon.value, r.tq.max_abs,
              yes(r.ok), norm_sq(psi));
  std::printf("semiorthogonal %s, dimension function in {0,1} %s\n", yes(semiorthogonality(psi).ok),
              yes(is_zero_one_valued(D_psi(psi))));
}
