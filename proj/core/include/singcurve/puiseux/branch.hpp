#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/puiseux/newton.hpp"

namespace singcurve::puiseux {

// Linear change of coordinates (X, Y) = (a x + b y, c x + d y).
struct Frame {
  Rational a = 1, b = 0, c = 0, d = 1;

  static Frame identity() { return {}; }
  static Frame swap() { return {0, 1, 1, 0}; }
  static Frame shear(int k) { return {1, k, 0, 1}; }

  Frame inverse() const;
  // this after o
  Frame after(const Frame& o) const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_swap() const { return a == 0 && b == 1 && c == 1 && d == 0; }
  std::string str() const;
  friend bool operator==(const Frame&, const Frame&) = default;
};

class ExpansionSource {
 public:
  virtual ~ExpansionSource() = default;
  // Expansion whose coefficients are final through t-exponent `order`.
  virtual PuiseuxExpansion expand_to(FieldContext& ctx, int order) const = 0;
};

struct Parametrization {
  UniPoly x, y;  // in t
};

struct Branch {
  PuiseuxExpansion expansion;
  // Coordinates exchanged: the expansion describes (y, x).
  bool swapped = false;
  std::shared_ptr<const ExpansionSource> source;
  // Present when the branch was given by a polynomial parametrization.
  std::optional<Parametrization> param;

  Frame frame() const { return swapped ? Frame::swap() : Frame::identity(); }
  std::string str() const;
};

struct Curve {
  std::vector<Branch> branches;
  std::optional<BiPoly> defining_poly;
};

// Ensures coefficients are final through `order` (in t).
Branch deepen(FieldContext& ctx, const Branch& b, int order);

// Branch decomposition. Branches tangent to x = 0, including x = 0 itself,
// are returned with swapped = true.
Curve branches_of(FieldContext& ctx, const BiPoly& f, const Rational& target = 0, bool auto_reduce = false);

// Puiseux data of (X(t), Y(t)). The coordinate of lower order becomes the
// parameter direction; the result is normalized.
Branch from_parametrization(FieldContext& ctx, const UniPoly& x, const UniPoly& y);

// With n = ord X: y as a series in s where X = s^n, final through s^order.
// X and Y must be known through t^(order + n - 1).
PuiseuxExpansion reparametrize(FieldContext& ctx, const exact::Series& X, const exact::Series& Y, int order);

// The branch expressed in another frame, final through `order`. Throws
// InvalidInput if the branch is tangent to X = 0 in that frame.
PuiseuxExpansion reframe(FieldContext& ctx, const Branch& b, const Frame& target, int order);

// Direction (dx, dy) of the tangent line in original coordinates.
std::pair<FieldElem, FieldElem> tangent_direction(const Branch& b);

// Removes a common factor of m and the exponents.
PuiseuxExpansion normalize(const PuiseuxExpansion& e);

struct Implicit {
  BiPoly poly;
  // Built from a truncated expansion rather than the branch itself.
  bool truncated = false;
};

// det(y I - A) for multiplication by y(t) on K[x][t]/(t^m - x), in the
// expansion's own coordinates; all stored terms are used.
BiPoly implicitize(const PuiseuxExpansion& e);
// In original coordinates.
Implicit implicitize(FieldContext& ctx, const Branch& b);

// k with b_r = zeta_m^(k r) a_r for every exponent up to the common
// precision, if such a twist exists.
std::optional<int> conjugacy_twist(FieldContext& ctx, const PuiseuxExpansion& p, const PuiseuxExpansion& q);

}  // namespace singcurve::puiseux
