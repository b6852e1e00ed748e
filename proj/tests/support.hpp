#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "singcurve/exact/field.hpp"
#include "singcurve/exact/poly.hpp"
#include "singcurve/invariants/characteristic.hpp"
#include "singcurve/puiseux/branch.hpp"

namespace testing_support {

using singcurve::exact::BiPoly;
using singcurve::exact::FieldContext;
using singcurve::exact::FieldElem;
using singcurve::exact::Rational;
using singcurve::exact::UniPoly;
using singcurve::invariants::Int;
using singcurve::invariants::PuiseuxChar;
using singcurve::puiseux::Branch;

// Deterministic source for the property generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }
  long nonzero(int bound) {
    long v = range(1, bound);
    return coin() ? v : -v;
  }

 private:
  std::mt19937_64 rng_;
};

// Polynomial in x, y written in the command-line grammar.
BiPoly poly(const std::string& text);

// Polynomial parametrization x = t^m, y = sum c_k t^k.
struct Param {
  int m = 1;
  std::vector<long> y;  // y[k] = coefficient of t^k
  UniPoly xpoly() const;
  UniPoly ypoly() const;
  std::string text() const;  // "param: t^4, t^6+t^7"
};

// Random injective parametrization with m <= max_m whose y has order > m
// (not tangent to x = 0) unless `allow_tangent`.
Param random_param(Gen& g, int max_m, int max_deg, bool allow_tangent = false);
// A partner sharing a random initial segment of p's series, possibly with
// doubled multiplicity.
Param related_param(Gen& g, const Param& p);

// Every valid characteristic with m <= max_m and beta_g <= max_beta.
std::vector<std::vector<Int>> all_characteristics(Int max_m, Int max_beta);
// Random valid characteristic (m; betas).
std::vector<Int> random_characteristic(Gen& g, Int max_m, Int max_beta);

// Largest integer not in the monoid generated by gens, by dynamic
// programming; -1 when there are no gaps.
Int brute_force_frobenius(const std::vector<Int>& gens);
// Minimal generators of the monoid generated by gens.
std::vector<Int> minimal_generators(const std::vector<Int>& gens);

// ord_s Res_t(t^m1 - X2(s), Y1(t) - Y2(s)): intersection multiplicity of the
// two parametrized branches at the origin.
long resultant_intersection(const Param& a, const Param& b);
// ord_x Res_y(f, g) for f with f(0, y) = y^a and a constant leading
// y-coefficient, so the origin is the only common point over x = 0.
long resultant_local_intersection(const BiPoly& f, const BiPoly& g);

// Coefficients of Phi_d from its roots in floating point, rounded.
std::vector<long> numeric_cyclotomic(int d);

// p and q describe the same branch up to t -> zeta t: same frame, same m,
// and q_r = zeta^r p_r for a fixed m-th root of unity, through the common
// precision.
bool same_up_to_twist(FieldContext& ctx, const Branch& p, const Branch& q);

// Oracle for the contact multiset of a branch with characteristic c against
// a pro-branch of contact kappa: alpha_r repeated e_{r-1} - e_r times for
// alpha_r < kappa, then kappa repeated e_q times.
std::vector<Rational> predicted_shape(const PuiseuxChar& c, const Rational& kappa);

}  // namespace testing_support
