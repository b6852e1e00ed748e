#include "singcurve/exact/gauss.hpp"

#include "singcurve/errors.hpp"

namespace singcurve::exact {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  Rational n = norm();
  return {re / n, -im / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational pow(GaussRational a, unsigned n) {
  GaussRational r(1);
  while (n) {
    if (n & 1) r *= a;
    a *= a;
    n >>= 1;
  }
  return r;
}

std::string to_string(const GaussRational& g) {
  if (g.is_zero()) return "0";
  std::string out;
  if (sgn(g.re) != 0) out = g.re.get_str();
  if (sgn(g.im) != 0) {
    Rational a = abs(g.im);
    std::string im = (a == 1) ? "i" : a.get_str() + "*i";
    if (sgn(g.im) < 0)
      out += "-" + im;
    else
      out += (out.empty() ? "" : "+") + im;
  }
  return out;
}

bool needs_parens(const GaussRational& g) { return sgn(g.re) != 0 && sgn(g.im) != 0; }

namespace {

std::optional<Integer> integer_root(const Integer& a, unsigned n) {
  if (sgn(a) < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& a, unsigned n) {
  if (n == 0) return std::nullopt;
  if (sgn(a) < 0) return std::nullopt;
  auto p = integer_root(a.get_num(), n);
  auto q = integer_root(a.get_den(), n);
  if (!p || !q) return std::nullopt;
  Rational r(*p, *q);
  r.canonicalize();
  return r;
}

std::optional<GaussRational> gauss_sqrt(const GaussRational& a) {
  if (a.is_zero()) return GaussRational();
  if (a.is_real()) {
    if (sgn(a.re) > 0) {
      if (auto r = rational_root(a.re, 2)) return GaussRational(*r);
      return std::nullopt;
    }
    if (auto r = rational_root(-a.re, 2)) return GaussRational(Rational(0), *r);
    return std::nullopt;
  }
  // (x+iy)^2 = a: x^2 = (re + |a|)/2, y = im / 2x
  auto mod = rational_root(a.norm(), 2);
  if (!mod) return std::nullopt;
  auto x = rational_root((a.re + *mod) / 2, 2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  Rational y = a.im / (2 * *x);
  return GaussRational(*x, y);
}

std::optional<GaussRational> gauss_root(const GaussRational& a, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1 || a.is_zero()) return a;
  if (a.is_real()) {
    if (sgn(a.re) > 0) {
      if (auto r = rational_root(a.re, n)) return GaussRational(*r);
    } else if (n % 2 == 1) {
      if (auto r = rational_root(-a.re, n)) return GaussRational(-*r);
    } else if (n % 4 == 2) {
      // i^n = -1 when n = 2 mod 4
      if (auto r = rational_root(-a.re, n)) return GaussRational(Rational(0), *r);
    }
  }
  if (n % 2 == 0) {
    if (auto s = gauss_sqrt(a)) {
      if (auto r = gauss_root(*s, n / 2)) return r;
      if (auto r = gauss_root(-*s, n / 2)) return r;
    }
  }
  return std::nullopt;
}

}  // namespace singcurve::exact
