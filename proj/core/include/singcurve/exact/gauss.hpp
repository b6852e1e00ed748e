#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace singcurve::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// Element of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long v) : re(v) {}
  GaussRational(const Rational& r) : re(r) {}
  GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  static GaussRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussRational pow(GaussRational a, unsigned n);

// "3/2", "-i", "1+2*i"
std::string to_string(const GaussRational& g);

// True when to_string(g) needs parentheses as a factor.
bool needs_parens(const GaussRational& g);

// Exact n-th root of a nonnegative rational, if it is rational.
std::optional<Rational> rational_root(const Rational& a, unsigned n);

// Exact square root in Q(i), if any.
std::optional<GaussRational> gauss_sqrt(const GaussRational& a);

// Some n-th root inside Q(i), if one exists there.
std::optional<GaussRational> gauss_root(const GaussRational& a, unsigned n);

}  // namespace singcurve::exact
