#pragma once

#include <string>
#include <vector>

#include "singcurve/contact/contact.hpp"

namespace singcurve::contact {

struct IntersectionValue {
  bool infinite = false;
  Integer value = 0;
  bool lower_bound = false;

  std::string str() const;  // "13", ">= 13", "inf"
  friend bool operator==(const IntersectionValue& a, const IntersectionValue& b) {
    return a.infinite == b.infinite && a.lower_bound == b.lower_bound && (a.infinite || a.value == b.value);
  }
};

struct IntersectionTrace {
  IntersectionValue value;
  // individual paths; unset for infinite or bounded values
  Rational substitution, corollary, compact, pro_sum;
  ContactResult contact;
  std::string describe() const;
};

// B1.B2 by substitution into an implicit equation, by the contact formula
// with the maximal contact, and by summing pro-branch contacts. Throws
// InternalError if they disagree.
IntersectionTrace intersection_detail(FieldContext& ctx, const Branch& b1, const Branch& b2);
IntersectionValue intersection(FieldContext& ctx, const Branch& b1, const Branch& b2);

// (m'/m)(sum_{i<=q} beta_i (e_{i-1} - e_i) + kappa e_q m), q with alpha_q < kappa <= alpha_{q+1}
Rational corollary_formula(const PuiseuxChar& c, Integer m_other, const Rational& kappa);
// e_q (m'/m)(beta-bar_{q+1} - beta_{q+1} + m kappa)
Rational compact_formula(const PuiseuxChar& c, Integer m_other, const Rational& kappa);
// The multiset {alpha_r x (e_{r-1} - e_r), kappa x e_q} predicted for kappa.
std::vector<Rational> predicted_multiset(const PuiseuxChar& c, const Rational& kappa);

using Matrix = std::vector<std::vector<IntersectionValue>>;
// Pairwise intersection numbers; the diagonal is infinite.
Matrix intersection_matrix(FieldContext& ctx, const std::vector<Branch>& bs);

}  // namespace singcurve::contact
