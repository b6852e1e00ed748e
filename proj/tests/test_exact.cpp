#include <gtest/gtest.h>

#include "singcurve/exact/cyclotomic.hpp"
#include "singcurve/exact/field.hpp"
#include "singcurve/exact/gauss.hpp"
#include "singcurve/exact/poly.hpp"
#include "singcurve/exact/resultant.hpp"
#include "singcurve/errors.hpp"
#include "support.hpp"

using namespace singcurve::exact;
using testing_support::Gen;
using testing_support::poly;

namespace {

UniPoly upoly(std::initializer_list<long> c) { return UniPoly(c); }

GaussRational gr(long re, long im) { return GaussRational(Rational(re), Rational(im)); }

}  // namespace

TEST(Gauss, ArithmeticAndInverse) {
  EXPECT_EQ(gr(1, 2) * gr(3, -1), gr(5, 5));
  EXPECT_EQ(gr(1, 2) * gr(1, 2).inverse(), GaussRational(1));
  EXPECT_EQ(pow(gr(0, 1), 4), GaussRational(1));
  EXPECT_EQ(to_string(gr(0, 1)), "i");
}

TEST(Gauss, RootsInsideQi) {
  auto s = gauss_sqrt(GaussRational(-4));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, GaussRational(-4));
  EXPECT_FALSE(gauss_sqrt(GaussRational(2)).has_value());
  auto r = gauss_root(GaussRational(Rational(27, 8)), 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(pow(*r, 3), GaussRational(Rational(27, 8)));
}

TEST(Field, AdjoinedRootsSatisfyTheirPolynomial) {
  FieldContext ctx;
  auto p = upoly({-2, 0, 0, 1});  // t^3 - 2
  for (const auto& r : ctx.roots(p)) EXPECT_TRUE(ctx.is_zero(p.eval(r)));
  auto q = upoly({1, 0, 1});  // t^2 + 1 splits in Q(i)
  auto rs = ctx.roots(q);
  EXPECT_EQ(rs.size(), 2u);
  for (const auto& r : rs) EXPECT_TRUE(r.is_base());
}

TEST(Field, RootsOfUnityHaveExactOrder) {
  FieldContext ctx;
  for (int n : {1, 2, 3, 4, 5, 6, 8}) {
    FieldElem z = ctx.root_of_unity(n);
    EXPECT_TRUE(ctx.is_zero(z.pow(n) - FieldElem(1L))) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(ctx.is_zero(z.pow(k) - FieldElem(1L))) << n << " " << k;
  }
}

TEST(Field, ReducibleModulusSplitsConsistently) {
  FieldContext ctx;
  // t^4 - 1 over Q(i) is a product of linear factors, the root must still be a root
  FieldElem a = ctx.adjoin_root(upoly({-4, 0, 0, 0, 1}));
  EXPECT_TRUE(ctx.is_zero(a.pow(4) - FieldElem(4L)));
  FieldElem b = ctx.nth_root(a, 2);
  EXPECT_TRUE(ctx.is_zero(b * b - a));
}

TEST(Resultant, MatchesProductOverRoots) {
  // Res(t^2 - 1, t - 2) = g(1) g(-1) = 3
  EXPECT_EQ(resultant(upoly({-1, 0, 1}), upoly({-2, 1})).base_value(), GaussRational(3));
  // disc(t^2 + b t + c) = b^2 - 4c
  EXPECT_EQ(discriminant(upoly({5, 3, 1})).base_value(), GaussRational(9 - 20));
}

TEST(Resultant, RandomProductsAgreeWithRootFormula) {
  Gen g(11);
  for (int it = 0; it < 30; ++it) {
    // f = prod (t - a_i), h = prod (t - b_j): Res = prod (a_i - b_j)
    std::vector<long> as, bs;
    for (int k = g.range(1, 4); k > 0; --k) as.push_back(g.range(-6, 6));
    for (int k = g.range(1, 4); k > 0; --k) bs.push_back(g.range(-6, 6));
    UniPoly f = upoly({1}), h = upoly({1});
    for (long a : as) f = f * upoly({-a, 1});
    for (long b : bs) h = h * upoly({-b, 1});
    // the column layout used here differs from prod (a_i - b_j) by (-1)^(mn)
    long expect = (as.size() * bs.size()) % 2 ? -1 : 1;
    for (long a : as)
      for (long b : bs) expect *= a - b;
    EXPECT_EQ(resultant(f, h).base_value(), GaussRational(expect));
  }
}

TEST(Resultant, BivariateEliminatesY) {
  // Res_y(y^2 - x, y - x) = x^2 - x
  UniPoly r = resultant_y(poly("y^2 - x"), poly("y - x"));
  EXPECT_EQ(r, upoly({0, -1, 1}));
}

TEST(Resultant, ReducedDetection) {
  EXPECT_TRUE(is_reduced(poly("x^2 - y^3")));
  EXPECT_FALSE(is_reduced(poly("(x - y)^2*(x + 1)")));
  EXPECT_TRUE(is_reduced(poly("(x - 1)^2*(x - y)")));
  EXPECT_EQ(squarefree_part(poly("(y - x^2)^3")), squarefree_part(poly("y - x^2")));
}

TEST(Cyclotomic, CoefficientsMatchNumericRoots) {
  for (int d = 1; d <= 60; ++d) {
    auto exact = cyclotomic_int(d);
    auto num = testing_support::numeric_cyclotomic(d);
    ASSERT_EQ(exact.size(), num.size()) << d;
    for (size_t k = 0; k < num.size(); ++k) EXPECT_EQ(exact[k], num[k]) << d << " " << k;
  }
}

TEST(Cyclotomic, ProductOverDivisorsIsTnMinusOne) {
  for (int n = 1; n <= 60; ++n) {
    IntPoly prod{1};
    for (int d : divisors(n)) prod = int_mul(prod, cyclotomic_int(d));
    IntPoly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    EXPECT_EQ(prod, expect) << n;
  }
}

TEST(Poly, BivariateArithmetic) {
  BiPoly f = poly("(x + y)^3");
  EXPECT_EQ(f, poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_EQ(f.swapped(), f);
  EXPECT_EQ(poly("x^2 - y^3").str(), "-y^3 + x^2");
  EXPECT_EQ(poly("1/2*x - i*y") * poly("2"), poly("x - 2i*y"));
}
