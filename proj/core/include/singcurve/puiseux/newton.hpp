#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/exact/field.hpp"
#include "singcurve/exact/poly.hpp"

namespace singcurve::puiseux {

using exact::BiPoly;
using exact::FieldContext;
using exact::FieldElem;
using exact::Rational;
using exact::UniPoly;

// Segment from (r0, s0) to (r0 + k a, s0 - k b), gcd(a, b) = 1.
struct Edge {
  int r0 = 0, s0 = 0, a = 1, b = 1, k = 1;

  int r1() const { return r0 + k * a; }
  int s1() const { return s0 - k * b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct NewtonPolygon {
  std::vector<std::pair<int, int>> support;
  // In the order they are walked from (0, ord f(0,y)) downwards.
  std::vector<Edge> edges;
};

// Requires f(0,0) = 0 and x not dividing f. Coefficients are taken as
// given; use exact::normalize first when they live in a split tower.
NewtonPolygon newton_polygon(const BiPoly& f);

// phi(T) = sum_l u_l T^(k-l), u_l = a_{r0 + l a, s0 - l b}
UniPoly edge_polynomial(const BiPoly& f, const Edge& e);

// f(x^b, x^a (c0 + y)) / x^(b r0 + a s0)
BiPoly newton_step(const BiPoly& f, const Edge& e, const FieldElem& c0);

// y = sum terms[r] t^r with x = t^m.
struct PuiseuxExpansion {
  int m = 1;
  std::map<int, FieldElem> terms;
  // Every coefficient of exponent <= trunc_order is final.
  int trunc_order = 0;
  // No further terms exist.
  bool exact = false;
  int multiplicity = 1;
  // The line x = 0 (x = 0, y = t).
  bool vertical = false;

  int order() const { return terms.empty() ? -1 : terms.begin()->first; }
  std::string str(const std::string& xv = "x", const std::string& yv = "y") const;
  exact::Series y_series(int prec) const;
};

PuiseuxExpansion truncated(const PuiseuxExpansion& e, int order);

// State of one solution once it has been separated from all others:
// x = t^m, y = P(t) + t^E y_k where f_k(x_k, y_k) is regular in y_k.
struct IsolatedState {
  BiPoly f;
  int m = 1;
  std::map<int, FieldElem> P;
  int E = 0;
  BiPoly original;
};

// Continue an isolated solution until its coefficients are final through
// t-exponent `order`.
PuiseuxExpansion continue_expansion(FieldContext& ctx, const IsolatedState& s, int order);

struct Solution {
  PuiseuxExpansion expansion;
  std::shared_ptr<const IsolatedState> state;
  // leading exponent a/b of the first step; zero for the y = 0 root
  int lead_a = 0, lead_b = 1;
};

enum class LeadFilter { All, AtLeastOne, GreaterThanOne };

struct ExpandOptions {
  Rational target = 0;  // in x-degree
  LeadFilter filter = LeadFilter::All;
  bool emit_vertical = true;
};

// All Newton-Puiseux solutions of f(x,y) = 0, one per conjugacy class.
std::vector<Solution> newton_solutions(FieldContext& ctx, const BiPoly& f, const ExpandOptions& opt);

std::vector<PuiseuxExpansion> expand(FieldContext& ctx, const BiPoly& f, const Rational& target = 0);

// Depth needed beyond the characteristic: max(target m, N + 1, beta_g) + m,
// read off the exponent set.
int required_order(int m, const std::map<int, FieldElem>& terms, const Rational& target);

}  // namespace singcurve::puiseux
