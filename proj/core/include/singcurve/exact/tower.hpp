#pragma once

#include <memory>
#include <string>
#include <vector>

#include "singcurve/exact/gauss.hpp"

namespace singcurve::exact {

// Coordinates of an element of a tower level. At depth 0 only `g` is used;
// at depth d > 0, `c` holds the coefficients (lowest first, trailing zeros
// trimmed) of a polynomial in the level-d generator over depth d-1.
struct Coords {
  GaussRational g;
  std::vector<Coords> c;

  friend bool operator==(const Coords&, const Coords&) = default;
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Q(i)[a1,...,ad] modulo monic polynomials M_k(a_k) with coefficients in
// the previous level. The moduli need not be irreducible; a zero divisor
// found during inversion splits a level (see FieldContext).
class Tower {
 public:
  using Poly = std::vector<Coords>;

  static const TowerPtr& base();

  int depth() const { return static_cast<int>(levels_.size()); }
  // Monic modulus of level k (1-based); coefficients have depth k-1.
  const Poly& modulus(int k) const { return levels_[k - 1]; }
  int degree(int k) const { return static_cast<int>(levels_[k - 1].size()) - 1; }
  const TowerPtr& parent() const { return parent_; }

  bool descends_from(const Tower* other) const;

  static TowerPtr with_level(const TowerPtr& t, Poly monic);
  // Replace level k by `factor` and re-reduce every higher level.
  static TowerPtr with_split(const TowerPtr& t, int k, Poly factor);

  std::string describe() const;

 private:
  std::vector<Poly> levels_;
  TowerPtr parent_;
};

// Thrown by low-level inversion when a nonconstant gcd with a modulus
// appears. `factor` is monic over depth level-1.
struct ZeroDivisorFound {
  int level;
  Tower::Poly factor;
};

namespace coords {

bool is_zero(const Coords& a, int d);
Coords constant(const GaussRational& g, int d);
Coords embed(const Coords& a, int from, int to);
Coords add(const Coords& a, const Coords& b, int d);
Coords sub(const Coords& a, const Coords& b, int d);
Coords neg(const Coords& a, int d);
Coords mul(const Coords& a, const Coords& b, int d, const Tower& t);
Coords reduce(const Coords& a, int d, const Tower& t);
// Throws ZeroDivisorFound, or InvalidInput for a zero argument.
Coords inverse(const Coords& a, int d, const Tower& t);
// True if `a` is an embedded base-field value.
bool is_constant(const Coords& a, int d);
GaussRational constant_value(const Coords& a, int d);
std::string to_string(const Coords& a, int d);
// Exact quotient a / m for monic m; coefficients at depth cd.
std::vector<Coords> div_monic(const std::vector<Coords>& a, const std::vector<Coords>& m, int cd,
                              const Tower& t);

}  // namespace coords

// Element of a tower. Binary operations move both operands into the more
// refined of the two towers, which must lie on one lineage.
class FieldElem {
 public:
  FieldElem();
  FieldElem(long v);
  FieldElem(const Rational& r);
  FieldElem(const GaussRational& g);
  FieldElem(TowerPtr t, Coords c);

  static FieldElem i() { return FieldElem(GaussRational::unit_i()); }
  // The generator of level k of t.
  static FieldElem generator(const TowerPtr& t, int k);

  const TowerPtr& tower() const { return tower_; }
  int depth() const { return tower_->depth(); }
  const Coords& coords() const { return c_; }

  bool is_syntactic_zero() const { return coords::is_zero(c_, depth()); }
  bool is_base() const { return coords::is_constant(c_, depth()); }
  GaussRational base_value() const { return coords::constant_value(c_, depth()); }
  bool is_rational() const { return is_base() && base_value().is_real(); }

  FieldElem lifted(const TowerPtr& t) const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator-(const FieldElem& a);
  // Ring equality after moving both into a common tower.
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem pow(unsigned n) const;
  std::string str() const;

 private:
  TowerPtr tower_;
  Coords c_;
};

// Picks the tower of the two that descends from the other.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

}  // namespace singcurve::exact
