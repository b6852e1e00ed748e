#pragma once

#include <vector>

#include "singcurve/contact/intersection.hpp"
#include "singcurve/invariants/characteristic.hpp"
#include "singcurve/knots/symbol.hpp"

namespace singcurve::knots {

using invariants::PuiseuxChar;

struct CablingPair {
  Int p = 1, q = 1;
  friend bool operator==(const CablingPair&, const CablingPair&) = default;
};

// (e_{q-1}/e_q, beta-bar_q/e_q) for q = 1..g
std::vector<CablingPair> cabling_invariants(const PuiseuxChar& c);

// sum S(e_{i-1} bb_i / e_i) - sum S(bb_i) - S(m) + S(1)
Symbol alexander_symbol(const PuiseuxChar& c);

// Cable recursion from the unknot.
Symbol alexander_by_cabling(const PuiseuxChar& c);

// The negative terms are bb_0 < ... < bb_g. InvalidInput if the symbol is
// not that of an algebraic knot.
PuiseuxChar char_from_alexander(const Symbol& s);

// B_i.B_j = Lk(K_i, K_j); the diagonal is excluded (infinite).
contact::Matrix linking_matrix(exact::FieldContext& ctx, const puiseux::Curve& c);

}  // namespace singcurve::knots
