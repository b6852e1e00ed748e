#pragma once

#include <string>
#include <vector>

#include "singcurve/exact/gauss.hpp"
#include "singcurve/exact/poly.hpp"

namespace singcurve::exact {

// Dense integer polynomial, lowest degree first, no trailing zeros.
using IntPoly = std::vector<Integer>;

IntPoly int_mul(const IntPoly& a, const IntPoly& b);
// Exact quotient; returns false if b does not divide a.
bool int_divexact(const IntPoly& a, const IntPoly& b, IntPoly& q);
void int_trim(IntPoly& a);
std::string int_str(const IntPoly& a, const std::string& var = "t");

// t^n - 1
IntPoly int_binomial(int n);

std::vector<int> divisors(int n);

// Phi_d, obtained from t^d - 1 by dividing out Phi_e for every proper
// divisor e of d.
IntPoly cyclotomic_int(int d);
UniPoly cyclotomic(int d);

}  // namespace singcurve::exact
