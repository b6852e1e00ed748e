#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "singcurve/exact/cyclotomic.hpp"

namespace singcurve::knots {

using Int = std::int64_t;
using exact::IntPoly;

// sum a_n S(n), standing for prod (t^n - 1)^(a_n); empty means 1.
struct Symbol {
  std::map<Int, Int> terms;

  void add(Int n, Int a);
  Symbol& operator+=(const Symbol& o);
  // "S(26) + S(12) + S(1) - S(13) - S(6) - S(4)", "0" when empty
  std::string str() const;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// S(pq) + S(1) - S(p) - S(q); InvalidInput unless p, q >= 1 are coprime.
Symbol torus_symbol(Int p, Int q);

// Delta(t^p) Delta_(p,q)(t): every S(n) becomes S(pn), then the torus
// symbol is added.
Symbol cable_symbol(const Symbol& s, Int p, Int q);

// d -> multiplicity of Phi_d, by inclusion-exclusion over divisors.
// InvalidInput naming the factor if some multiplicity is negative.
std::map<Int, Int> cyclotomic_form(const Symbol& s);

// Integer polynomial with no factor t and positive lowest coefficient.
IntPoly expand_symbol(const Symbol& s);

// Strips t^k and fixes the sign of the lowest coefficient.
IntPoly canonical(IntPoly p);

// Symbol of a product of cyclotomic polynomials (up to +-t^k); InvalidInput
// otherwise.
Symbol symbol_of_polynomial(const IntPoly& p);

}  // namespace singcurve::knots
