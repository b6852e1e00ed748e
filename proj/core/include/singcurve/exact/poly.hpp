#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/exact/tower.hpp"

namespace singcurve::exact {

class FieldContext;

// Dense univariate polynomial, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElem> c);
  UniPoly(std::initializer_list<long> c);

  static UniPoly monomial(const FieldElem& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem operator[](int k) const;
  const FieldElem& lead() const { return c_.back(); }
  bool is_base() const;

  UniPoly derivative() const;
  FieldElem eval(const FieldElem& v) const;
  UniPoly scaled(const FieldElem& s) const;
  UniPoly lifted(const TowerPtr& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

// Exact quotient by a monic polynomial; no inversions needed.
UniPoly div_monic(const UniPoly& a, const UniPoly& m);

// The following may refine the context's tower.
UniPoly normalize(FieldContext& ctx, const UniPoly& p);
UniPoly monic(FieldContext& ctx, const UniPoly& p);
std::pair<UniPoly, UniPoly> divmod(FieldContext& ctx, const UniPoly& a, const UniPoly& b);
UniPoly gcd(FieldContext& ctx, const UniPoly& a, const UniPoly& b);

// Sparse bivariate polynomial sum a_{ij} x^i y^j.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, FieldElem>;

  BiPoly() = default;
  static BiPoly constant(const FieldElem& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(const FieldElem& c, int i, int j);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  FieldElem coeff(int i, int j) const;
  void add_term(int i, int j, const FieldElem& c);

  int deg_x() const;
  int deg_y() const;
  // Order of f(0,y) in y, or -1 if x divides f.
  int ord_y_on_axis() const;
  // Order of f(x,0) in x, or -1 if y divides f.
  int ord_x_on_axis() const;
  int x_valuation() const;
  int y_valuation() const;

  BiPoly swapped() const;
  BiPoly truncated_x(int max_i) const;
  BiPoly shifted(int di, int dj) const;
  BiPoly lifted(const TowerPtr& t) const;
  BiPoly derivative_y() const;
  bool is_base() const;
  // f as a polynomial in y with coefficients in K[x].
  std::vector<UniPoly> as_y_poly() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const FieldElem& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  BiPoly pow(unsigned n) const;

  // Canonical form: decreasing y degree, then decreasing x degree.
  std::string str(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  Terms t_;
};

// Lift coefficients to the context tower and drop those that vanish there.
BiPoly normalize(FieldContext& ctx, const BiPoly& f);

// Truncated power series in one variable: coefficients c[0..prec].
using Series = std::vector<FieldElem>;
Series series_mul(const Series& a, const Series& b, int prec);
// f(X(t), Y(t)) truncated at degree prec.
Series evaluate(const BiPoly& f, const Series& X, const Series& Y, int prec);
// First index holding a coefficient that is nonzero in the context, or -1.
int series_order(FieldContext& ctx, const Series& s);

std::string join_terms(const std::vector<std::string>& terms);
std::string coeff_times(const std::string& coeff, const std::string& mono);

}  // namespace singcurve::exact
