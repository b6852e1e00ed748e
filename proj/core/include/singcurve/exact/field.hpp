#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "singcurve/exact/poly.hpp"

namespace singcurve::exact {

// Mutable arithmetic session over a growing tower. Elements created earlier
// remain valid: every later tower descends from the earlier ones.
//
// When a modulus turns out reducible the context keeps one component:
// the factor of smaller degree, the gcd factor on ties.
class FieldContext {
 public:
  FieldContext() : tower_(Tower::base()) {}
  explicit FieldContext(TowerPtr t) : tower_(std::move(t)) {}

  const TowerPtr& tower() const { return tower_; }
  FieldElem lift(const FieldElem& e) const { return e.lifted(tower_); }
  int splits() const { return splits_; }

  bool is_zero(const FieldElem& e);
  FieldElem inverse(const FieldElem& e);
  FieldElem div(const FieldElem& a, const FieldElem& b) { return a * inverse(b); }

  // Adjoins a root of the square-free part of p; linear factors are solved
  // in place without a new level.
  FieldElem adjoin_root(const UniPoly& p);
  // All distinct roots of p (p nonconstant).
  std::vector<FieldElem> roots(const UniPoly& p);
  // Some n-th root of a.
  FieldElem nth_root(const FieldElem& a, int n);
  // A primitive n-th root of unity, fixed for the lifetime of the context.
  FieldElem root_of_unity(int n);

 private:
  void split(const ZeroDivisorFound& z);
  std::vector<FieldElem> base_roots(UniPoly q);

  TowerPtr tower_;
  int splits_ = 0;
  std::map<int, FieldElem> unity_;
};

struct Inverse {
  FieldElem value;
};
struct Split {
  TowerPtr zero_side;
  TowerPtr unit_side;
};
struct Zero {};
using InvertResult = std::variant<Inverse, Split, Zero>;

// Non-mutating inversion in e's own tower.
InvertResult try_invert(const FieldElem& e);

}  // namespace singcurve::exact
