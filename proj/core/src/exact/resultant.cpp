#include "singcurve/exact/resultant.hpp"

#include <algorithm>

#include "singcurve/errors.hpp"

namespace singcurve::exact {

namespace {

TowerPtr tower_of(const UniPoly& f, const UniPoly& g) {
  TowerPtr t = Tower::base();
  for (const auto& c : f.coeffs()) t = common_tower(t, c.tower());
  for (const auto& c : g.coeffs()) t = common_tower(t, c.tower());
  return t;
}

}  // namespace

FieldElem sylvester_det(FieldContext& ctx, const UniPoly& f, int m, const UniPoly& g, int n) {
  const int N = m + n;
  if (N == 0) return FieldElem(1);
  std::vector<std::vector<FieldElem>> a(N, std::vector<FieldElem>(N));
  for (int c = 0; c < n; ++c)
    for (int k = 0; k <= m; ++k) a[c + k][c] = f[k];
  for (int c = 0; c < m; ++c)
    for (int k = 0; k <= n; ++k) a[c + k][n + c] = g[k];

  FieldElem det(1);
  for (int c = 0; c < N; ++c) {
    int p = -1;
    for (int r = c; r < N && p < 0; ++r)
      if (!ctx.is_zero(a[r][c])) p = r;
    if (p < 0) return FieldElem();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    FieldElem inv = ctx.inverse(a[c][c]);
    for (int r = c + 1; r < N; ++r) {
      if (a[r][c].is_syntactic_zero()) continue;
      FieldElem f = a[r][c] * inv;
      for (int k = c; k < N; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return ctx.lift(det);
}

FieldElem resultant(FieldContext& ctx, const UniPoly& f, const UniPoly& g) {
  UniPoly a = normalize(ctx, f), b = normalize(ctx, g);
  if (a.is_zero() && b.is_zero()) throw InvalidInput("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) return FieldElem();
  return sylvester_det(ctx, a, a.degree(), b, b.degree());
}

FieldElem resultant(const UniPoly& f, const UniPoly& g) {
  FieldContext ctx(tower_of(f, g));
  return resultant(ctx, f, g);
}

FieldElem discriminant(FieldContext& ctx, const UniPoly& f) {
  UniPoly a = normalize(ctx, f);
  const int m = a.degree();
  if (m < 1) throw InvalidInput("discriminant of a constant polynomial");
  FieldElem r = resultant(ctx, a, a.derivative());
  return (m * (m - 1) / 2) % 2 ? -r : r;
}

FieldElem discriminant(const UniPoly& f) {
  FieldContext ctx(tower_of(f, UniPoly()));
  return discriminant(ctx, f);
}

UniPoly squarefree_part(FieldContext& ctx, const UniPoly& f) {
  UniPoly a = normalize(ctx, f);
  if (a.is_zero()) throw InvalidInput("square-free part of the zero polynomial");
  if (a.degree() == 0) return a;
  UniPoly g = gcd(ctx, a, a.derivative());
  return div_monic(a.lifted(ctx.tower()), g);
}

UniPoly squarefree_part(const UniPoly& f) {
  FieldContext ctx(tower_of(f, UniPoly()));
  return squarefree_part(ctx, f);
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (!f.is_base() || !g.is_base()) throw InvalidInput("resultant_y expects coefficients in Q(i)");
  const int m = f.deg_y(), n = g.deg_y();
  if (m < 0 || n < 0) throw InvalidInput("resultant_y of a zero polynomial");
  const int bound = n * std::max(f.deg_x(), 0) + m * std::max(g.deg_x(), 0);
  auto fy = f.as_y_poly(), gy = g.as_y_poly();
  FieldContext ctx;
  std::vector<GaussRational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    FieldElem x0(k);
    std::vector<FieldElem> fc, gc;
    for (const auto& c : fy) fc.push_back(c.eval(x0));
    for (const auto& c : gy) gc.push_back(c.eval(x0));
    fc.resize(m + 1);
    gc.resize(n + 1);
    FieldElem v = sylvester_det(ctx, UniPoly(fc), m, UniPoly(gc), n);
    xs.emplace_back(k);
    ys.push_back(v.base_value());
  }
  // Newton divided differences.
  std::vector<GaussRational> dd = ys;
  for (size_t j = 1; j < dd.size(); ++j)
    for (size_t k = dd.size() - 1; k >= j; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - j]);
  UniPoly r;
  for (size_t j = dd.size(); j-- > 0;) {
    r = r * UniPoly({FieldElem(-xs[j]), FieldElem(1)});
    r += UniPoly({FieldElem(dd[j])});
  }
  return r;
}

namespace {

// Polynomials in y over Q(i)[x].
using YPoly = std::vector<UniPoly>;

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly to_y(const BiPoly& f) {
  YPoly p = f.as_y_poly();
  ytrim(p);
  return p;
}

BiPoly from_y(const YPoly& p) {
  BiPoly r;
  for (size_t j = 0; j < p.size(); ++j)
    for (int i = 0; i <= p[j].degree(); ++i) r.add_term(i, static_cast<int>(j), p[j][i]);
  return r;
}

UniPoly content(FieldContext& ctx, const YPoly& p) {
  UniPoly c;
  for (const auto& x : p) c = gcd(ctx, c, x);
  return c;
}

UniPoly exact_quo(FieldContext& ctx, const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(ctx, a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

YPoly primitive(FieldContext& ctx, const YPoly& p) {
  if (p.empty()) return p;
  UniPoly c = content(ctx, p);
  YPoly r;
  for (const auto& x : p) r.push_back(exact_quo(ctx, x, c));
  return r;
}

YPoly prem(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  const UniPoly& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    UniPoly lr = r.back();
    size_t shift = r.size() - b.size();
    for (auto& x : r) x = x * lb;
    for (size_t k = 0; k < b.size(); ++k) r[k + shift] -= lr * b[k];
    ytrim(r);
  }
  return r;
}

YPoly ydiv_exact(FieldContext& ctx, YPoly a, const YPoly& b) {
  if (b.empty()) throw InvalidInput("division by zero polynomial");
  ytrim(a);
  if (a.size() < b.size()) {
    if (!a.empty()) throw InternalError("inexact bivariate division");
    return {};
  }
  YPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    UniPoly t = exact_quo(ctx, a.back(), b.back());
    q[shift] = t;
    for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= t * b[k];
    ytrim(a);
  }
  if (!a.empty()) throw InternalError("inexact bivariate division");
  ytrim(q);
  return q;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (!a.is_base() || !b.is_base()) throw InvalidInput("bivariate gcd expects coefficients in Q(i)");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FieldContext ctx;
  YPoly A = to_y(a), B = to_y(b);
  UniPoly c = gcd(ctx, content(ctx, A), content(ctx, B));
  A = primitive(ctx, A);
  B = primitive(ctx, B);
  if (A.size() < B.size()) std::swap(A, B);
  while (B.size() > 1) {
    YPoly R = prem(A, B);
    A = std::move(B);
    B = primitive(ctx, R);
  }
  YPoly g = B.empty() ? A : YPoly{UniPoly({1})};
  for (auto& x : g) x = x * c;
  return from_y(g);
}

BiPoly div_exact(const BiPoly& a, const BiPoly& b) {
  FieldContext ctx;
  return from_y(ydiv_exact(ctx, to_y(a), to_y(b)));
}

BiPoly squarefree_part(const BiPoly& f) {
  if (f.is_zero()) throw InvalidInput("square-free part of the zero polynomial");
  if (!f.is_base()) throw InvalidInput("square-free part expects coefficients in Q(i)");
  FieldContext ctx;
  YPoly p = to_y(f);
  UniPoly c = content(ctx, p);
  YPoly pp = primitive(ctx, p);
  BiPoly prim = from_y(pp);
  BiPoly g = gcd(prim, prim.derivative_y());
  BiPoly sp = div_exact(prim, g);
  UniPoly sc = squarefree_part(ctx, c);
  BiPoly scb;
  for (int i = 0; i <= sc.degree(); ++i) scb.add_term(i, 0, sc[i]);
  return primitive_integral(scb * sp);
}

BiPoly primitive_integral(const BiPoly& f) {
  if (f.is_zero()) return f;
  for (const auto& [k, c] : f.terms())
    if (!c.is_rational()) return f;
  Integer l = 1, g = 0;
  for (const auto& [k, c] : f.terms()) {
    Rational v = c.base_value().re;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  // leading term in the printing order
  const BiPoly::Key* lead = nullptr;
  for (const auto& [k, c] : f.terms())
    if (!lead || k.second > lead->second || (k.second == lead->second && k.first > lead->first)) lead = &k;
  Rational s(l, g);
  s.canonicalize();
  if (sgn(f.coeff(lead->first, lead->second).base_value().re) < 0) s = -s;
  BiPoly r = f;
  r *= FieldElem(s);
  return r;
}

bool is_reduced(const BiPoly& f) {
  if (f.is_zero()) return false;
  FieldContext ctx;
  YPoly p = to_y(f);
  UniPoly c = content(ctx, p);
  int ordc = 0;
  while (ordc <= c.degree() && c[ordc].is_syntactic_zero()) ++ordc;
  if (ordc >= 2) return false;
  BiPoly prim = from_y(primitive(ctx, p));
  BiPoly g = gcd(prim, prim.derivative_y());
  return !g.coeff(0, 0).is_syntactic_zero();
}

}  // namespace singcurve::exact
