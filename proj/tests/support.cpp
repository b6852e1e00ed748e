#include "support.hpp"

#include <algorithm>
#include <complex>
#include <numeric>

#include "parser.hpp"
#include "singcurve/exact/resultant.hpp"

namespace testing_support {

using singcurve::exact::GaussRational;

namespace {

UniPoly from_longs(const std::vector<long>& c) {
  std::vector<FieldElem> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

int support_gcd(const Param& p) {
  int g = p.m;
  for (size_t k = 0; k < p.y.size(); ++k)
    if (p.y[k] != 0) g = std::gcd(g, static_cast<int>(k));
  return g;
}

// Appends random terms in (from, to] until the gcd with m drops to 1.
void fill_tail(Gen& g, Param& p, int from, int to) {
  p.y.resize(to + 1, 0);
  for (int k = from + 1; k <= to; ++k)
    if (g.range(0, 9) < 4) p.y[k] = g.nonzero(5);
  for (int k = from + 1; support_gcd(p) != 1 && k <= to; ++k)
    if (std::gcd(k, p.m) < p.m && p.y[k] == 0) p.y[k] = g.nonzero(5);
  while (!p.y.empty() && p.y.back() == 0) p.y.pop_back();
}

BiPoly univariate_in_x(const std::vector<long>& c) {
  BiPoly r;
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k]) r.add_term(static_cast<int>(k), 0, FieldElem(c[k]));
  return r;
}

BiPoly univariate_in_y(const std::vector<long>& c) { return univariate_in_x(c).swapped(); }

long x_order(const UniPoly& r) {
  for (int k = 0; k <= r.degree(); ++k)
    if (!r[k].base_value().is_zero()) return k;
  return -1;
}

FieldElem power(FieldContext& ctx, const FieldElem& a, long n) {
  if (n >= 0) return a.pow(static_cast<unsigned>(n));
  return ctx.inverse(a).pow(static_cast<unsigned>(-n));
}

}  // namespace

BiPoly poly(const std::string& text) {
  return singcurve::cli::to_bipoly(*singcurve::cli::parse_input(text).expr);
}

UniPoly Param::xpoly() const {
  std::vector<long> c(m + 1, 0);
  c[m] = 1;
  return from_longs(c);
}

UniPoly Param::ypoly() const { return from_longs(y); }

std::string Param::text() const {
  std::string s = "param: t^" + std::to_string(m) + ", ";
  bool first = true;
  for (size_t k = 0; k < y.size(); ++k) {
    if (y[k] == 0) continue;
    long c = y[k];
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "t^" + std::to_string(k);
    first = false;
  }
  if (first) s += "0";
  return s;
}

Param random_param(Gen& g, int max_m, int max_deg, bool allow_tangent) {
  for (;;) {
    Param p;
    p.m = g.range(1, max_m);
    int lo = allow_tangent ? 1 : p.m + 1;
    if (lo > max_deg) continue;
    p.y.assign(lo, 0);
    p.y.push_back(g.nonzero(5));
    fill_tail(g, p, lo, max_deg);
    if (support_gcd(p) == 1) return p;
  }
}

Param related_param(Gen& g, const Param& p) {
  const int mode = g.range(0, 2);
  const int top = static_cast<int>(p.y.size()) - 1;
  for (;;) {
    Param q;
    if (mode == 0 || top <= p.m + 1) {
      q = random_param(g, 4, p.m + 8);
      return q;
    }
    const int scale = (mode == 2 && p.m <= 3) ? 2 : 1;
    q.m = p.m * scale;
    const int cut = g.range(p.m + 1, top);
    q.y.assign(cut * scale + 1, 0);
    for (int k = 0; k < cut; ++k) q.y[k * scale] = p.y[k];
    // differ at the cut, possibly through a term p does not have
    long pc = cut < static_cast<int>(p.y.size()) ? p.y[cut] : 0;
    long d = g.nonzero(3);
    q.y[cut * scale] = pc + d;
    fill_tail(g, q, cut * scale, cut * scale + 6);
    if (support_gcd(q) == 1) return q;
  }
}

std::vector<std::vector<Int>> all_characteristics(Int max_m, Int max_beta) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int e, Int last) -> void {
    if (e == 1) {
      out.push_back(cur);
      return;
    }
    for (Int b = last + 1; b <= max_beta; ++b) {
      if (b % e == 0) continue;
      cur.push_back(b);
      self(self, std::gcd(e, b), b);
      cur.pop_back();
    }
  };
  for (Int m = 1; m <= max_m; ++m) {
    cur = {m};
    rec(rec, m, m);
  }
  return out;
}

std::vector<Int> random_characteristic(Gen& g, Int max_m, Int max_beta) {
  for (;;) {
    Int m = g.range(1, static_cast<int>(max_m));
    std::vector<Int> c{m};
    Int e = m, last = m;
    while (e > 1 && last < max_beta) {
      Int b = g.range(static_cast<int>(last) + 1, static_cast<int>(std::min<Int>(max_beta, last + 3 * m)));
      if (b % e == 0) continue;
      c.push_back(b);
      e = std::gcd(e, b);
      last = b;
    }
    if (e == 1) return c;
  }
}

Int brute_force_frobenius(const std::vector<Int>& gens) {
  Int lo = *std::min_element(gens.begin(), gens.end()), hi = *std::max_element(gens.begin(), gens.end());
  const Int limit = lo * hi + lo + 1;
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (Int n = 1; n <= limit; ++n)
    for (Int a : gens)
      if (a <= n && in[n - a]) {
        in[n] = 1;
        break;
      }
  Int last = -1;
  for (Int n = 0; n <= limit; ++n)
    if (!in[n]) last = n;
  return last;
}

std::vector<Int> minimal_generators(const std::vector<Int>& gens) {
  std::vector<Int> s = gens;
  std::sort(s.begin(), s.end());
  std::vector<Int> out;
  const Int limit = s.back();
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (Int a : s) {
    if (in[a]) continue;
    out.push_back(a);
    for (Int n = a; n <= limit; ++n)
      if (in[n - a]) in[n] = 1;
  }
  return out;
}

long resultant_intersection(const Param& a, const Param& b) {
  std::vector<long> tm(a.m + 1, 0);
  tm[a.m] = 1;
  std::vector<long> sm(b.m + 1, 0);
  sm[b.m] = 1;
  BiPoly P = univariate_in_y(tm) - univariate_in_x(sm);
  BiPoly Q = univariate_in_y(a.y) - univariate_in_x(b.y);
  if (Q.is_zero()) return -1;
  return x_order(singcurve::exact::resultant_y(P, Q));
}

long resultant_local_intersection(const BiPoly& f, const BiPoly& g) {
  return x_order(singcurve::exact::resultant_y(f, g));
}

std::vector<long> numeric_cyclotomic(int d) {
  std::vector<std::complex<double>> p{1.0};
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    std::complex<double> z = std::polar(1.0, 2 * pi * k / d);
    std::vector<std::complex<double>> q(p.size() + 1, 0.0);
    for (size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= z * p[j];
    }
    p = q;
  }
  std::vector<long> out;
  for (auto c : p) out.push_back(std::lround(c.real()));
  return out;
}

bool same_up_to_twist(FieldContext& ctx, const Branch& p0, const Branch& q0) {
  if (p0.swapped != q0.swapped || p0.expansion.m != q0.expansion.m) return false;
  auto last = [](const Branch& b) { return b.expansion.terms.empty() ? 0 : b.expansion.terms.rbegin()->first; };
  const int need = std::min(std::max(last(p0), last(q0)) + 1, 64);
  Branch p = p0.expansion.exact ? p0 : singcurve::puiseux::deepen(ctx, p0, need);
  Branch q = q0.expansion.exact ? q0 : singcurve::puiseux::deepen(ctx, q0, need);
  auto prec = [&](const Branch& b) { return b.expansion.exact ? need : b.expansion.trunc_order; };
  const int upto = std::min(prec(p), prec(q));
  const int m = p.expansion.m;

  auto coeff = [&](const Branch& b, int r) {
    auto it = b.expansion.terms.find(r);
    return it == b.expansion.terms.end() ? FieldElem(0L) : it->second;
  };
  // zeta^g known as z, starting from zeta^m = 1
  long g = m;
  FieldElem z(1L);
  std::vector<std::pair<int, FieldElem>> ratios;
  for (int r = 0; r <= upto; ++r) {
    FieldElem a = coeff(p, r), b = coeff(q, r);
    bool za = ctx.is_zero(a), zb = ctx.is_zero(b);
    if (za != zb) return false;
    if (za) continue;
    FieldElem u = ctx.div(b, a);
    ratios.emplace_back(r, u);
    // extended gcd of (g, r): s g + t r = h
    long old_r = g, rr = r, old_s = 1, s = 0, old_t = 0, t = 1;
    while (rr != 0) {
      long qt = old_r / rr;
      std::tie(old_r, rr) = std::make_pair(rr, old_r - qt * rr);
      std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    z = power(ctx, z, old_s) * power(ctx, u, old_t);
    g = old_r;
  }
  if (g != 1) {
    // no relation pins zeta; only possible when every exponent shares a factor with m
    return ratios.empty();
  }
  if (!ctx.is_zero(power(ctx, z, m) - FieldElem(1L))) return false;
  for (const auto& [r, u] : ratios)
    if (!ctx.is_zero(power(ctx, z, r) - u)) return false;
  return true;
}

std::vector<Rational> predicted_shape(const PuiseuxChar& c, const Rational& kappa) {
  std::vector<Rational> out;
  Int e_q = c.m;
  for (size_t r = 0; r < c.betas.size(); ++r) {
    Rational alpha(c.betas[r], c.m);
    alpha.canonicalize();
    if (!(alpha < kappa)) break;
    for (Int k = 0; k < c.es[r] - c.es[r + 1]; ++k) out.push_back(alpha);
    e_q = c.es[r + 1];
  }
  for (Int k = 0; k < e_q; ++k) out.push_back(kappa);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing_support
