#pragma once

#include "singcurve/exact/field.hpp"
#include "singcurve/exact/poly.hpp"

namespace singcurve::exact {

// Determinant of the (m+n)-square matrix whose first n columns hold the
// shifted coefficients a_0..a_m of f and whose last m columns hold those of
// g, each column read from the top starting at the lowest coefficient.
FieldElem resultant(FieldContext& ctx, const UniPoly& f, const UniPoly& g);
FieldElem resultant(const UniPoly& f, const UniPoly& g);

// Same layout with prescribed formal degrees (leading entries may vanish).
FieldElem sylvester_det(FieldContext& ctx, const UniPoly& f, int m, const UniPoly& g, int n);

// (-1)^{m(m-1)/2} R(f, f')
FieldElem discriminant(FieldContext& ctx, const UniPoly& f);
FieldElem discriminant(const UniPoly& f);

// f / gcd(f, f')
UniPoly squarefree_part(FieldContext& ctx, const UniPoly& f);
UniPoly squarefree_part(const UniPoly& f);

// Res_y(f, g) as a polynomial in x; coefficients of f, g in Q(i).
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

// Bivariate helpers over Q(i).
BiPoly gcd(const BiPoly& a, const BiPoly& b);
BiPoly div_exact(const BiPoly& a, const BiPoly& b);
// Square-free part of f over Q(i)[x,y].
BiPoly squarefree_part(const BiPoly& f);
// Rational multiple with coprime integer coefficients and a positive
// leading term; other polynomials are returned unchanged.
BiPoly primitive_integral(const BiPoly& f);
// True if no repeated factor of f passes through the origin.
bool is_reduced(const BiPoly& f);

}  // namespace singcurve::exact
