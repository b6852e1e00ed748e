#include "singcurve/knots/alexander.hpp"

#include <numeric>

#include "singcurve/errors.hpp"

namespace singcurve::knots {

std::vector<CablingPair> cabling_invariants(const PuiseuxChar& c) {
  std::vector<CablingPair> r;
  for (size_t q = 1; q < c.es.size(); ++q) r.push_back({c.es[q - 1] / c.es[q], c.beta_bars[q] / c.es[q]});
  return r;
}

Symbol alexander_symbol(const PuiseuxChar& c) {
  Symbol s;
  for (size_t i = 1; i < c.es.size(); ++i) {
    s.add(c.es[i - 1] * c.beta_bars[i] / c.es[i], 1);
    s.add(c.beta_bars[i], -1);
  }
  s.add(c.m, -1);
  s.add(1, 1);
  return s;
}

Symbol alexander_by_cabling(const PuiseuxChar& c) {
  Symbol s;
  for (const auto& [p, q] : cabling_invariants(c)) s = cable_symbol(s, p, q);
  return s;
}

PuiseuxChar char_from_alexander(const Symbol& s) {
  const std::string bad = "not an algebraic-knot Alexander symbol";
  if (s.terms.empty()) return invariants::make_char(1, {});
  std::vector<Int> bb;
  for (const auto& [n, a] : s.terms) {
    if (a < -1) throw InvalidInput(bad + ": S(" + std::to_string(n) + ") occurs with multiplicity " + std::to_string(a));
    if (a == -1) bb.push_back(n);
  }
  if (bb.size() < 2) throw InvalidInput(bad);
  std::vector<Int> es{bb[0]};
  for (size_t q = 1; q < bb.size(); ++q) es.push_back(std::gcd(es.back(), bb[q]));
  std::vector<Int> betas;
  for (size_t q = 1; q < bb.size(); ++q) {
    if (q == 1)
      betas.push_back(bb[1]);
    else
      betas.push_back(bb[q] - es[q - 2] / es[q - 1] * bb[q - 1] + betas.back());
  }
  PuiseuxChar c;
  try {
    c = invariants::make_char(bb[0], betas);
  } catch (const InvalidInput&) {
    throw InvalidInput(bad);
  }
  if (!(alexander_symbol(c) == s)) throw InvalidInput(bad);
  return c;
}

contact::Matrix linking_matrix(exact::FieldContext& ctx, const puiseux::Curve& c) {
  return contact::intersection_matrix(ctx, c.branches);
}

}  // namespace singcurve::knots
