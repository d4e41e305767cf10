#pragma once

// Seeded random step functions and sets for property tests.

#include <random>

#include "frameforge/stepfn.hpp"

namespace gen {

using namespace frameforge;
using Rng = std::mt19937_64;

inline Amp random_value(Rng& rng) {
  static const Amp values[] = {Amp(1.0), Amp(-1.0), Amp(cplx(0, 1)), Amp(0.5), Amp::inv_sqrt2(),
                               Amp(cplx(0.25, -0.75)), Amp(2.0), Amp(cplx(-0.5, 0.5))};
  return values[std::uniform_int_distribution<int>(0, 7)(rng)];
}

// Pieces on the grid 2^{-depth} inside [lo, hi); each cell kept with probability 1/2.
inline Pieces random_pieces(Rng& rng, Dyadic lo, Dyadic hi, int depth) {
  Pieces p;
  Dyadic h = Dyadic::pow2(-depth);
  std::bernoulli_distribution keep(0.5);
  for (Dyadic a = lo; a < hi; a += h)
    if (keep(rng)) p.push_back({{a, a + h}, random_value(rng)});
  return p;
}

inline StepFunction random_step(Rng& rng, int window_exp, Dyadic radius, int depth) {
  return StepFunction(window_exp, random_pieces(rng, -radius, radius, depth));
}

// Supported away from 0: cells in ±[inner, outer).
inline StepFunction random_annular(Rng& rng, int window_exp, Dyadic inner, Dyadic outer, int depth) {
  Pieces p = random_pieces(rng, inner, outer, depth);
  Pieces n = random_pieces(rng, -outer, -inner, depth);
  p.insert(p.end(), n.begin(), n.end());
  if (p.empty()) p.push_back({{inner, inner + Dyadic::pow2(-depth)}, Amp(1.0)});
  return StepFunction(window_exp, std::move(p));
}

// ±1 on a partition of [0,1) into 2^depth cells.
inline PeriodicStepFunction random_sign(Rng& rng, int depth) {
  Pieces p;
  Dyadic h = Dyadic::pow2(-depth);
  std::bernoulli_distribution flip(0.5);
  for (Dyadic a(0); a < Dyadic(1); a += h) p.push_back({{a, a + h}, Amp(flip(rng) ? -1.0 : 1.0)});
  return PeriodicStepFunction(std::move(p));
}

// Unimodular with phases in (1/8)Z, on 2^depth cells.
inline PeriodicStepFunction random_phase(Rng& rng, int depth) {
  Pieces p;
  Dyadic h = Dyadic::pow2(-depth);
  std::uniform_int_distribution<int> k(0, 7);
  for (Dyadic a(0); a < Dyadic(1); a += h) p.push_back({{a, a + h}, Amp(cis(Dyadic(k(rng), 3)))});
  return PeriodicStepFunction(std::move(p));
}

// A union of cells of [0,1) at the given depth.
inline PeriodicSet random_pset(Rng& rng, int depth, double density = 0.5) {
  std::vector<Interval> v;
  Dyadic h = Dyadic::pow2(-depth);
  std::bernoulli_distribution keep(density);
  for (Dyadic a(0); a < Dyadic(1); a += h)
    if (keep(rng)) v.push_back({a, a + h});
  return PeriodicSet(std::move(v));
}

}  // namespace gen
