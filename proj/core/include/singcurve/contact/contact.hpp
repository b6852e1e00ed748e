#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singcurve/invariants/characteristic.hpp"

namespace singcurve::contact {

using exact::FieldContext;
using exact::FieldElem;
using exact::Integer;
using exact::Rational;
using invariants::PuiseuxChar;
using puiseux::Branch;
using puiseux::Frame;
using puiseux::PuiseuxExpansion;

struct ContactValue {
  bool infinite = false;
  Rational value = 0;
  // Agreement reached the truncation order; the true value is >= value.
  bool lower_bound = false;

  static ContactValue inf() { return {true, 0, false}; }
  std::string str() const;  // "7/4", ">= 7/4", "inf"
  friend bool operator==(const ContactValue& a, const ContactValue& b) {
    return a.infinite == b.infinite && a.lower_bound == b.lower_bound && (a.infinite || a.value == b.value);
  }
};

bool operator<(const ContactValue& a, const ContactValue& b);

// gamma_k(x) = sum a_r zeta_m^(k r) x^(r/m)
struct ProBranch {
  int m = 1;
  int twist = 0;
  std::map<Rational, FieldElem> terms;
  Rational known;  // coefficients are final for exponents <= known
  bool exact = false;
};

ProBranch pro_branch(FieldContext& ctx, const PuiseuxExpansion& e, int twist);

// min{s : c_s != c'_s}
ContactValue pro_contact(FieldContext& ctx, const ProBranch& g, const ProBranch& h);

// {O(gamma_k, g) : k = 0..m-1} over the pro-branches gamma_k of e.
std::vector<ContactValue> contact_multiset(FieldContext& ctx, const PuiseuxExpansion& e, const ProBranch& g);

// {O(gamma_k, gamma_0) : k = 1..m-1}
std::vector<ContactValue> self_multiset(FieldContext& ctx, const PuiseuxExpansion& e);

// First frame among identity, swap, (x + k y, y) for k = 1, -1, 2, -2, ...
// in which no branch is tangent to X = 0.
Frame common_frame(FieldContext& ctx, const std::vector<const Branch*>& bs);

// True only when equality is certain: same expansion source, or both
// exact and related by t -> zeta t.
bool same_branch(FieldContext& ctx, const Branch& a, const Branch& b);

struct ContactResult {
  ContactValue kappa;  // maximum over the multiset
  ContactValue minimum;
  std::vector<ContactValue> multiset;  // pro-branches of b1 against one of b2
  Frame frame;
  PuiseuxExpansion e1, e2;  // both in `frame`
  PuiseuxChar c1, c2;
};

// Expansions are deepened until the characteristics are complete and the
// maximal contact is decided, up to an internal limit.
ContactResult contact(FieldContext& ctx, const Branch& b1, const Branch& b2);

}  // namespace singcurve::contact
