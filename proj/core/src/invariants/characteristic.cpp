#include "singcurve/invariants/characteristic.hpp"

#include <numeric>

#include "singcurve/errors.hpp"

namespace singcurve::invariants {

std::string PuiseuxChar::str() const {
  std::string s = "(" + std::to_string(m);
  for (size_t i = 0; i < betas.size(); ++i) s += (i == 0 ? ";" : ",") + std::to_string(betas[i]);
  return s + ")";
}

std::vector<Int> gcd_chain(Int m, const std::vector<Int>& betas) {
  std::vector<Int> es{m};
  for (Int b : betas) es.push_back(std::gcd(es.back(), b));
  return es;
}

std::vector<Int> beta_bars(const PuiseuxChar& c) {
  std::vector<Int> bb{c.m};
  const auto es = c.es.empty() ? gcd_chain(c.m, c.betas) : c.es;
  for (size_t i = 0; i < c.betas.size(); ++i) {
    if (i == 0) {
      bb.push_back(c.betas[0]);
      continue;
    }
    // bb_{i+1} = (e_{i-1}/e_i) bb_i + beta_{i+1} - beta_i, 1-based i
    bb.push_back(es[i - 1] / es[i] * bb[i] + c.betas[i] - c.betas[i - 1]);
  }
  return bb;
}

PuiseuxChar make_char(Int m, std::vector<Int> betas) {
  if (m < 1) throw InvalidInput("multiplicity must be positive");
  Int e = m, prev = m;
  for (Int b : betas) {
    if (b <= prev) throw InvalidInput("characteristic exponents must increase and exceed m");
    if (b % e == 0) throw InvalidInput("exponent " + std::to_string(b) + " does not lower the gcd chain");
    e = std::gcd(e, b);
    prev = b;
  }
  if (e != 1) throw InvalidInput("the gcd chain of the characteristic does not reach 1");
  PuiseuxChar c;
  c.m = m;
  c.betas = std::move(betas);
  c.es = gcd_chain(c.m, c.betas);
  c.beta_bars = beta_bars(c);
  return c;
}

Branch normalize(const Branch& b) {
  Branch r = b;
  r.expansion = puiseux::normalize(b.expansion);
  return r;
}

PuiseuxChar characteristic(const PuiseuxExpansion& e) {
  if (e.vertical) throw InvalidInput("the line x = 0 has no characteristic in its own frame");
  if (!e.terms.empty() && e.order() < e.m)
    throw InvalidInput("the expansion is tangent to x = 0; use the swapped frame");
  Int g = e.m;
  std::vector<Int> betas;
  for (const auto& [r, c] : e.terms) {
    if (g == 1) break;
    if (r % g == 0) continue;
    betas.push_back(r);
    g = std::gcd(g, static_cast<Int>(r));
  }
  if (g != 1) {
    if (e.exact) throw InvalidInput("the parametrization is not injective; normalize it first");
    throw TruncationError("the characteristic is not complete at t^" + std::to_string(e.trunc_order) +
                          " (gcd still " + std::to_string(g) + ")");
  }
  return make_char(e.m, std::move(betas));
}

PuiseuxChar characteristic(puiseux::FieldContext& ctx, const Branch& b0) {
  Branch b = b0;
  for (;;) {
    try {
      return characteristic(b.expansion);
    } catch (const TruncationError&) {
      if (!b.source || b.expansion.trunc_order > 4096) throw;
      b = puiseux::deepen(ctx, b, 2 * b.expansion.trunc_order + b.expansion.m);
    }
  }
}

}  // namespace singcurve::invariants
