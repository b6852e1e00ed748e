#pragma once

#include <vector>

#include "singcurve/invariants/characteristic.hpp"

namespace singcurve::invariants {

struct Semigroup {
  std::vector<Int> generators;
  Int conductor = 0;  // N + 1
  Int delta = 0;
  // membership of 0..conductor
  std::vector<bool> table;

  Int frobenius() const { return conductor - 1; }
  bool contains(Int n) const { return n >= conductor || (n >= 0 && table[n]); }
  std::vector<Int> gaps() const;
  // Members below the conductor.
  std::vector<Int> small_elements() const;
};

// N = sum_q (e_{q-1} - e_q)(beta_q - 1) - 1
Int frobenius_formula(const PuiseuxChar& c);

// Generated by the beta-bars; conductor from the closed formula.
Semigroup semigroup_of(const PuiseuxChar& c);

// Numerical semigroup generated by `gens`, conductor found by scanning.
// Throws InvalidInput if the generators are not coprime.
Semigroup generated_semigroup(std::vector<Int> gens);

// beta-bar_0 = min S \ {0}; beta-bar_q = least element of S not divisible
// by e_{q-1}. Throws InvalidInput if the result does not generate the
// given semigroup (not the semigroup of a plane branch).
PuiseuxChar char_from_semigroup(const std::vector<Int>& gens);

}  // namespace singcurve::invariants
