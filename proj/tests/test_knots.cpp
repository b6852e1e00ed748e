#include <gtest/gtest.h>

#include <map>

#include "singcurve/contact/intersection.hpp"
#include "singcurve/knots/alexander.hpp"
#include "singcurve/knots/symbol.hpp"
#include "singcurve/puiseux/branch.hpp"
#include "singcurve/errors.hpp"
#include "support.hpp"

using namespace singcurve;
using namespace singcurve::knots;
using testing_support::Gen;

namespace {

std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<long> as_longs(const IntPoly& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

invariants::PuiseuxChar random_char(Gen& g, Int max_m, Int max_beta) {
  auto v = testing_support::random_characteristic(g, max_m, max_beta);
  return invariants::make_char(v[0], std::vector<Int>(v.begin() + 1, v.end()));
}

}  // namespace

TEST(Alexander, FourSixSevenSymbol) {
  auto c = invariants::make_char(4, {6, 7});
  auto s = alexander_symbol(c);
  EXPECT_EQ(s.str(), "S(26) + S(12) + S(1) - S(13) - S(6) - S(4)");
  auto cf = cyclotomic_form(s);
  std::map<Int, Int> nonzero;
  for (auto [d, k] : cf)
    if (k) nonzero[d] = k;
  EXPECT_EQ(nonzero, (std::map<Int, Int>{{12, 1}, {26, 1}}));
}

TEST(Alexander, FourSixSevenPolynomialMatchesDisplayedProduct) {
  // (t^12 - t^11 + ... - t + 1)(t^4 - t^2 + 1), lowest degree first
  std::vector<long> phi26{1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1};
  std::vector<long> phi12{1, 0, -1, 0, 1};
  auto expect = mul(phi26, phi12);
  auto got = as_longs(expand_symbol(alexander_symbol(invariants::make_char(4, {6, 7}))));
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got.size(), 17u);
}

TEST(Alexander, CablingPairs) {
  auto ps = cabling_invariants(invariants::make_char(4, {6, 7}));
  EXPECT_EQ(ps, (std::vector<CablingPair>{{2, 3}, {2, 13}}));
  auto qs = cabling_invariants(invariants::make_char(6, {27, 83}));
  EXPECT_EQ(qs, (std::vector<CablingPair>{{2, 9}, {3, 110}}));
}

TEST(Alexander, ClosedFormEqualsCableRecursion) {
  Gen g(201);
  for (int it = 0; it < 300; ++it) {
    auto c = random_char(g, 12, 120);
    EXPECT_EQ(alexander_symbol(c), alexander_by_cabling(c)) << c.str();
  }
}

TEST(Alexander, RecoverCharacteristicFromSymbol) {
  auto all = testing_support::all_characteristics(8, 60);
  for (const auto& v : all) {
    auto c = invariants::make_char(v[0], std::vector<Int>(v.begin() + 1, v.end()));
    EXPECT_EQ(char_from_alexander(alexander_symbol(c)), c) << c.str();
  }
}

TEST(Alexander, RecoverRejectsNonAlgebraicSymbols) {
  Symbol s;
  s.add(4, 1);
  EXPECT_THROW(char_from_alexander(s), singcurve::InvalidInput);
  Symbol two = torus_symbol(2, 3);
  two += torus_symbol(2, 5);
  EXPECT_THROW(char_from_alexander(two), singcurve::InvalidInput);
}

TEST(Alexander, DegreeIsTwiceDelta) {
  // deg Delta = 2 delta = conductor for a branch
  Gen g(211);
  for (int it = 0; it < 100; ++it) {
    auto c = random_char(g, 10, 80);
    auto p = expand_symbol(alexander_symbol(c));
    auto bb = c.beta_bars;
    // conductor from the closed formula written out here: sum (e_{q-1} - e_q)(beta_q - 1)
    Int cond = 0;
    for (size_t q = 0; q < c.betas.size(); ++q) cond += (c.es[q] - c.es[q + 1]) * (c.betas[q] - 1);
    EXPECT_EQ(static_cast<Int>(p.size()) - 1, cond) << c.str();
  }
}

TEST(Symbol, ExpandIsInjectiveOnAlgebraicKnots) {
  auto all = testing_support::all_characteristics(8, 50);
  std::map<std::vector<long>, std::string> seen;
  for (const auto& v : all) {
    auto c = invariants::make_char(v[0], std::vector<Int>(v.begin() + 1, v.end()));
    auto p = as_longs(expand_symbol(alexander_symbol(c)));
    auto [it, fresh] = seen.emplace(p, c.str());
    EXPECT_TRUE(fresh) << c.str() << " collides with " << it->second;
  }
}

TEST(Symbol, PolynomialRoundTrip) {
  Gen g(221);
  for (int it = 0; it < 100; ++it) {
    // random products of cyclotomic polynomials
    Symbol s;
    for (int k = g.range(1, 4); k > 0; --k) {
      Int d = g.range(1, 30);
      for (Int e : exact::divisors(static_cast<int>(d))) {
        // Phi_d = prod (t^e - 1)^mu(d/e)
        Int n = d / e, mu = 1;
        for (Int p = 2; p <= n; ++p) {
          if (n % p) continue;
          n /= p;
          if (n % p == 0) {
            mu = 0;
            break;
          }
          mu = -mu;
        }
        if (mu) s.add(e, mu);
      }
    }
    auto p = expand_symbol(s);
    EXPECT_EQ(symbol_of_polynomial(p), s) << s.str();
  }
}

TEST(Symbol, ErrorsAndPrinting) {
  EXPECT_EQ(Symbol{}.str(), "0");
  EXPECT_THROW(torus_symbol(2, 4), singcurve::InvalidInput);
  Symbol s;
  s.add(2, -1);
  EXPECT_THROW(expand_symbol(s), singcurve::InvalidInput);
  EXPECT_THROW(symbol_of_polynomial(IntPoly{1, 1, 1, 1, 1, 1, 2}), singcurve::InvalidInput);
}

TEST(Linking, EqualsIntersectionMatrix) {
  exact::FieldContext ctx;
  auto c = puiseux::branches_of(ctx, testing_support::poly("(y^2 - x^3)*(y - x^2)*(x - y^2)"));
  auto lk = linking_matrix(ctx, c);
  auto im = contact::intersection_matrix(ctx, c.branches);
  ASSERT_EQ(lk.size(), im.size());
  for (size_t i = 0; i < lk.size(); ++i)
    for (size_t j = 0; j < lk.size(); ++j) EXPECT_EQ(lk[i][j], im[i][j]);
}
