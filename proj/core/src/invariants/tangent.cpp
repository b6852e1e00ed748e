#include "singcurve/invariants/characteristic.hpp"

namespace singcurve::invariants {

std::string TangentLine::str() const {
  if (vertical) return "x = 0";
  if (slope.is_syntactic_zero()) return "y = 0";
  return "y = " + exact::coeff_times(slope.str(), "x");
}

TangentInfo tangent_and_multiplicity(puiseux::FieldContext& ctx, const Branch& b) {
  TangentInfo t;
  const PuiseuxExpansion& e = b.expansion;
  t.multiplicity = e.vertical ? 1 : (e.terms.empty() ? e.m : std::min<Int>(e.m, e.order()));
  auto [dx, dy] = puiseux::tangent_direction(b);
  if (ctx.is_zero(dx)) {
    t.line.vertical = true;
  } else {
    t.line.slope = ctx.div(dy, dx);
    if (ctx.is_zero(t.line.slope)) t.line.slope = puiseux::FieldElem(0);
  }
  return t;
}

}  // namespace singcurve::invariants
