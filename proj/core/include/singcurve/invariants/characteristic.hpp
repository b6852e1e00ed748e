#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singcurve/puiseux/branch.hpp"

namespace singcurve::invariants {

using puiseux::Branch;
using puiseux::PuiseuxExpansion;
using Int = std::int64_t;

// (m; beta_1..beta_g) with e_0..e_g and beta-bar_0..beta-bar_g.
struct PuiseuxChar {
  Int m = 1;
  std::vector<Int> betas;
  std::vector<Int> es;
  std::vector<Int> beta_bars;

  int genus() const { return static_cast<int>(betas.size()); }
  std::string str() const;  // "(4;6,7)", "(1)"
  friend bool operator==(const PuiseuxChar& a, const PuiseuxChar& b) { return a.m == b.m && a.betas == b.betas; }
};

// Validates the exponents and fills the auxiliary sequences. Throws
// InvalidInput unless betas increase, none is divisible by the running gcd,
// and the gcd chain ends at 1.
PuiseuxChar make_char(Int m, std::vector<Int> betas);

// Auxiliary gcd chain e_0 = m, e_i = gcd(e_{i-1}, beta_i).
std::vector<Int> gcd_chain(Int m, const std::vector<Int>& betas);

// beta-bar_0 = m, beta-bar_1 = beta_1,
// beta-bar_{i+1} = (e_{i-1}/e_i) beta-bar_i + beta_{i+1} - beta_i.
std::vector<Int> beta_bars(const PuiseuxChar& c);

Branch normalize(const Branch& b);

// Reads the characteristic off the stored terms; throws TruncationError if
// the gcd chain has not reached 1 by the truncation order. The expansion
// must not be tangent to its own x = 0.
PuiseuxChar characteristic(const PuiseuxExpansion& e);
// Deepens the branch as needed.
PuiseuxChar characteristic(puiseux::FieldContext& ctx, const Branch& b);

struct TangentLine {
  bool vertical = false;  // x = 0
  puiseux::FieldElem slope;  // y = slope x otherwise
  std::string str() const;
};

struct TangentInfo {
  TangentLine line;
  Int multiplicity = 1;
};

// Tangent line in the original coordinates and m(B) = min{m, ord y}.
TangentInfo tangent_and_multiplicity(puiseux::FieldContext& ctx, const Branch& b);

}  // namespace singcurve::invariants
