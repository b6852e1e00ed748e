#include <gtest/gtest.h>

#include <algorithm>

#include "singcurve/contact/contact.hpp"
#include "singcurve/contact/equisingular.hpp"
#include "singcurve/contact/intersection.hpp"
#include "singcurve/exact/resultant.hpp"
#include "singcurve/puiseux/branch.hpp"
#include "singcurve/errors.hpp"
#include "support.hpp"

using namespace singcurve;
using namespace singcurve::contact;
using exact::BiPoly;
using testing_support::Gen;
using testing_support::Param;
using testing_support::poly;

namespace {

Branch branch_of(FieldContext& ctx, const Param& p) { return puiseux::from_parametrization(ctx, p.xpoly(), p.ypoly()); }

Param param(int m, std::initializer_list<std::pair<int, long>> terms) {
  Param p;
  p.m = m;
  for (auto [k, c] : terms) {
    if (static_cast<int>(p.y.size()) <= k) p.y.resize(k + 1, 0);
    p.y[k] = c;
  }
  return p;
}

std::vector<Rational> sorted_values(const std::vector<ContactValue>& vs) {
  std::vector<Rational> out;
  for (const auto& v : vs) out.push_back(v.value);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Contact, MultisetAgainstThreeHalves) {
  FieldContext ctx;
  auto b = branch_of(ctx, param(4, {{6, 1}, {7, 1}}));
  // the pro-branch y = x^(3/2)
  auto cusp = branch_of(ctx, param(2, {{3, 1}}));
  auto r = contact::contact(ctx, b, cusp);
  EXPECT_EQ(r.kappa.str(), "7/4");
  EXPECT_EQ(r.minimum.str(), "3/2");
  EXPECT_EQ(sorted_values(r.multiset), (std::vector<Rational>{Rational(3, 2), Rational(3, 2), Rational(7, 4), Rational(7, 4)}));
}

TEST(Contact, SelfMultiset) {
  FieldContext ctx;
  auto b = branch_of(ctx, param(4, {{6, 1}, {7, 1}}));
  auto e = puiseux::deepen(ctx, b, 12).expansion;
  EXPECT_EQ(sorted_values(self_multiset(ctx, e)), (std::vector<Rational>{Rational(3, 2), Rational(3, 2), Rational(7, 4)}));
}

TEST(Contact, SameBranchIsInfinite) {
  FieldContext ctx;
  auto c = puiseux::branches_of(ctx, poly("y^2 - x^3"));
  auto r = contact::contact(ctx, c.branches[0], c.branches[0]);
  EXPECT_TRUE(r.kappa.infinite);
  EXPECT_EQ(r.kappa.str(), "inf");
}

TEST(Contact, PredictedShapeOnRandomPairs) {
  Gen g(101);
  int checked = 0;
  for (int it = 0; checked < 20 && it < 200; ++it) {
    Param p = testing_support::random_param(g, 4, 12);
    Param q = testing_support::related_param(g, p);
    FieldContext ctx;
    auto b1 = branch_of(ctx, p), b2 = branch_of(ctx, q);
    auto r = contact::contact(ctx, b1, b2);
    if (r.kappa.infinite || r.kappa.lower_bound) continue;
    ++checked;
    // b1 against one pro-branch of b2: shape from b1's characteristic
    EXPECT_EQ(sorted_values(r.multiset), testing_support::predicted_shape(r.c1, r.kappa.value))
        << p.text() << " | " << q.text();
  }
  EXPECT_EQ(checked, 20);
}

TEST(Contact, UltrametricOnRandomTriples) {
  Gen g(111);
  for (int it = 0; it < 25; ++it) {
    Param a = testing_support::random_param(g, 3, 10);
    Param b = testing_support::related_param(g, a);
    Param c = g.coin() ? testing_support::related_param(g, a) : testing_support::related_param(g, b);
    FieldContext ctx;
    auto ba = branch_of(ctx, a), bb = branch_of(ctx, b), bc = branch_of(ctx, c);
    auto ab = contact::contact(ctx, ba, bb).kappa, bc_ = contact::contact(ctx, bb, bc).kappa,
         ac = contact::contact(ctx, ba, bc).kappa;
    if (ab.lower_bound || bc_.lower_bound || ac.lower_bound) continue;
    // O(a,c) >= min(O(a,b), O(b,c)), in all three rotations
    auto mn = [](const ContactValue& x, const ContactValue& y) { return x < y ? x : y; };
    EXPECT_FALSE(ac < mn(ab, bc_)) << a.text() << " | " << b.text() << " | " << c.text();
    EXPECT_FALSE(ab < mn(ac, bc_)) << a.text() << " | " << b.text() << " | " << c.text();
    EXPECT_FALSE(bc_ < mn(ab, ac)) << a.text() << " | " << b.text() << " | " << c.text();
  }
}

TEST(Intersection, CuspAgainstHigherCusp) {
  FieldContext ctx;
  auto c1 = puiseux::branches_of(ctx, poly("x^2 - y^3"));
  auto c2 = puiseux::branches_of(ctx, poly("x^2 - y^5"));
  EXPECT_EQ(intersection(ctx, c1.branches[0], c2.branches[0]).str(), "6");
}

TEST(Intersection, CuspAgainstFourSixSeven) {
  FieldContext ctx;
  Param pa = param(2, {{3, 1}}), pb = param(4, {{6, 1}, {7, 1}});
  auto a = branch_of(ctx, pa);
  auto b = branch_of(ctx, pb);
  auto t = intersection_detail(ctx, a, b);
  EXPECT_EQ(t.value.str(), "13");
  EXPECT_EQ(testing_support::resultant_intersection(pa, pb), 13);
  EXPECT_EQ(testing_support::resultant_intersection(pb, pa), 13);
  EXPECT_EQ(intersection(ctx, b, a).str(), "13");
}

TEST(Intersection, TableOfSmoothBranchesIsAllTwo) {
  FieldContext ctx;
  auto c = puiseux::branches_of(ctx, poly("y^3 + x^6"));
  ASSERT_EQ(c.branches.size(), 3u);
  auto m = intersection_matrix(ctx, c.branches);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(m[i][j].str(), i == j ? "inf" : "2") << i << " " << j;
}

TEST(Intersection, ThreePathsAgreeOnRandomPairs) {
  Gen g(121);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    Param p = testing_support::random_param(g, 4, 10, g.range(0, 3) == 0);
    Param q = testing_support::related_param(g, p);
    FieldContext ctx;
    auto b1 = branch_of(ctx, p), b2 = branch_of(ctx, q);
    IntersectionTrace t;
    ASSERT_NO_THROW(t = intersection_detail(ctx, b1, b2)) << p.text() << " | " << q.text();
    if (t.value.infinite || t.value.lower_bound) continue;
    ++checked;
    EXPECT_EQ(t.substitution, t.corollary);
    EXPECT_EQ(t.corollary, t.pro_sum);
    EXPECT_EQ(t.compact, t.corollary);
    EXPECT_EQ(t.value.value, testing_support::resultant_intersection(p, q)) << p.text() << " | " << q.text();
  }
  EXPECT_GE(checked, 30);
}

TEST(Intersection, ResultantOracleOnPolynomialCurves) {
  // f(0, y) = y^a with unit leading coefficient: the origin is the only
  // common point on x = 0 and ord_x Res_y(f, g) = sum of branch pairings
  Gen g(131);
  int checked = 0;
  for (int it = 0; it < 25; ++it) {
    auto make = [&] {
      const int a = g.range(1, 3);
      BiPoly f = BiPoly::monomial(FieldElem(1L), 0, a);
      for (int k = g.range(1, 3); k > 0; --k)
        f.add_term(g.range(1, 6), g.range(0, a - 1), FieldElem(g.nonzero(3)));
      return f;
    };
    BiPoly f = make(), h = make();
    FieldContext ctx;
    if (!exact::is_reduced(f) || !exact::is_reduced(h)) continue;
    long oracle = testing_support::resultant_local_intersection(f, h);
    if (oracle < 0) continue;  // common component
    auto cf = puiseux::branches_of(ctx, f), ch = puiseux::branches_of(ctx, h);
    exact::Integer total = 0;
    bool bounded = false;
    for (const auto& b1 : cf.branches)
      for (const auto& b2 : ch.branches) {
        auto v = intersection(ctx, b1, b2);
        ASSERT_FALSE(v.infinite) << f.str() << " | " << h.str();
        bounded = bounded || v.lower_bound;
        total += v.value;
      }
    if (bounded) continue;
    ++checked;
    EXPECT_EQ(total, oracle) << f.str() << " | " << h.str();
  }
  EXPECT_GE(checked, 15);
}

TEST(Intersection, PaperPairsAgreeWithResultant) {
  const char* pairs[][2] = {{"x^2 - y^3", "x^2 - y^5"}, {"y^3 + x^6", "y^3 + y*x^4"}, {"y^2 - x^3", "y - x^2"},
                            {"y^3 - x^2", "y^3 - x^2 - x^3"}};
  for (auto& pr : pairs) {
    FieldContext ctx;
    BiPoly f = poly(pr[0]), h = poly(pr[1]);
    // each f has f(0, y) = c y^a with constant leading y-coefficient
    long oracle = testing_support::resultant_local_intersection(f, h);
    auto cf = puiseux::branches_of(ctx, f), ch = puiseux::branches_of(ctx, h);
    exact::Integer total = 0;
    for (const auto& b1 : cf.branches)
      for (const auto& b2 : ch.branches) total += intersection(ctx, b1, b2).value;
    EXPECT_EQ(total, oracle) << pr[0] << " | " << pr[1];
  }
}

TEST(Intersection, SubstitutionOracleForGoldens) {
  // f(phi(t)) directly from the defining polynomial
  FieldContext ctx;
  BiPoly f = poly("x^2 - y^3");
  auto c2 = puiseux::branches_of(ctx, poly("x^2 - y^5"));
  auto e = puiseux::deepen(ctx, c2.branches[0], 20);
  // swapped: y = t^m, x = phi(t)
  ASSERT_TRUE(e.swapped);
  exact::Series X = e.expansion.y_series(20), Y(21, FieldElem(0L));
  Y[e.expansion.m] = FieldElem(1L);
  EXPECT_EQ(exact::series_order(ctx, exact::evaluate(f, X, Y, 20)), 6);
}

TEST(Equisingular, SmoothTriplesAreEquisingular) {
  FieldContext ctx;
  auto a = puiseux::branches_of(ctx, poly("y^3 + x^6"));
  auto b = puiseux::branches_of(ctx, poly("y^3 + y*x^4"));
  auto r = equisingular(ctx, a, b);
  ASSERT_TRUE(r.equisingular) << r.reason;
  ASSERT_EQ(r.witness.size(), 3u);
  // the witness is a bijection preserving intersections
  auto da = curve_data(ctx, a), db = curve_data(ctx, b);
  std::vector<int> seen(3, 0);
  for (int w : r.witness) seen.at(w)++;
  EXPECT_EQ(seen, (std::vector<int>{1, 1, 1}));
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(db.chars[i], da.chars[r.witness[i]]);
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(db.matrix[i][j], da.matrix[r.witness[i]][r.witness[j]]);
  }
}

TEST(Equisingular, DifferentCuspsAreNot) {
  FieldContext ctx;
  auto a = puiseux::branches_of(ctx, poly("x^2 - y^3"));
  auto b = puiseux::branches_of(ctx, poly("x^2 - y^5"));
  auto r = equisingular(ctx, a, b);
  EXPECT_FALSE(r.equisingular);
  EXPECT_NE(r.reason.find("characteristics differ"), std::string::npos);
}

TEST(Equisingular, SameCharacteristicsDifferentIntersections) {
  FieldContext ctx;
  // two smooth branches meeting with order 1 versus order 2
  auto a = puiseux::branches_of(ctx, poly("y*(y - x)"));
  auto b = puiseux::branches_of(ctx, poly("y*(y - x^2)"));
  auto r = equisingular(ctx, a, b);
  EXPECT_FALSE(r.equisingular);
  EXPECT_EQ(r.reason, "no bijection of branches preserves characteristics and intersection numbers");
}
