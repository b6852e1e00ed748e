#include "singcurve/exact/poly.hpp"

#include <algorithm>

#include "singcurve/errors.hpp"
#include "singcurve/exact/field.hpp"

namespace singcurve::exact {

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

namespace {

bool compound(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-' || s[k] == ' ') return true;
  return false;
}

std::string power(const std::string& v, int k) {
  if (k == 0) return "";
  return k == 1 ? v : v + "^" + std::to_string(k);
}

}  // namespace

std::string coeff_times(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  if (compound(coeff)) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

// ---- UniPoly ----

UniPoly::UniPoly(std::vector<FieldElem> c) : c_(std::move(c)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

UniPoly UniPoly::monomial(const FieldElem& c, int k) {
  std::vector<FieldElem> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_syntactic_zero()) c_.pop_back();
}

FieldElem UniPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return FieldElem();
  return c_[k];
}

bool UniPoly::is_base() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElem& e) { return e.is_base(); });
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElem> d;
  for (int k = 1; k <= degree(); ++k) d.push_back(c_[k] * FieldElem(k));
  return UniPoly(std::move(d));
}

FieldElem UniPoly::eval(const FieldElem& v) const {
  FieldElem r;
  for (int k = degree(); k >= 0; --k) r = r * v + c_[k];
  return r;
}

UniPoly UniPoly::scaled(const FieldElem& s) const {
  std::vector<FieldElem> v;
  for (const auto& c : c_) v.push_back(c * s);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::lifted(const TowerPtr& t) const {
  std::vector<FieldElem> v;
  for (const auto& c : c_) v.push_back(c.lifted(t));
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_syntactic_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int k = 0; k <= a.degree(); ++k)
    if (!(a.c_[k] == b.c_[k])) return false;
  return true;
}

std::string UniPoly::str(const std::string& var) const {
  std::vector<std::string> terms;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_syntactic_zero()) continue;
    terms.push_back(coeff_times(c_[k].str(), power(var, k)));
  }
  return join_terms(terms);
}

UniPoly div_monic(const UniPoly& a, const UniPoly& m) {
  const int n = m.degree();
  if (n < 0) throw InvalidInput("division by the zero polynomial");
  std::vector<FieldElem> u = a.coeffs();
  if (a.degree() < n) {
    if (!a.is_zero()) throw InternalError("inexact division by a monic polynomial");
    return {};
  }
  std::vector<FieldElem> q(u.size() - n);
  for (int k = static_cast<int>(u.size()) - 1; k >= n; --k) {
    if (u[k].is_syntactic_zero()) continue;
    FieldElem f = u[k];
    q[k - n] = f;
    for (int i = 0; i <= n; ++i) u[k - n + i] -= f * m[i];
  }
  for (int k = 0; k < n; ++k)
    if (!u[k].is_syntactic_zero()) throw InternalError("inexact division by a monic polynomial");
  return UniPoly(std::move(q));
}

UniPoly normalize(FieldContext& ctx, const UniPoly& p) {
  std::vector<FieldElem> c = p.coeffs();
  while (!c.empty() && ctx.is_zero(c.back())) c.pop_back();
  for (auto& e : c) e = ctx.lift(e);
  return UniPoly(std::move(c));
}

UniPoly monic(FieldContext& ctx, const UniPoly& p) {
  UniPoly n = normalize(ctx, p);
  if (n.is_zero()) return n;
  return n.scaled(ctx.inverse(n.lead())).lifted(ctx.tower());
}

std::pair<UniPoly, UniPoly> divmod(FieldContext& ctx, const UniPoly& a, const UniPoly& b) {
  UniPoly bn = normalize(ctx, b);
  if (bn.is_zero()) throw InvalidInput("division by the zero polynomial");
  FieldElem inv = ctx.inverse(bn.lead());
  const int n = bn.degree();
  std::vector<FieldElem> u = a.coeffs();
  if (a.degree() < n) return {UniPoly(), normalize(ctx, a)};
  std::vector<FieldElem> q(u.size() - n);
  for (int k = static_cast<int>(u.size()) - 1; k >= n; --k) {
    if (u[k].is_syntactic_zero()) continue;
    FieldElem f = u[k] * inv;
    q[k - n] = f;
    for (int i = 0; i <= n; ++i) u[k - n + i] -= f * bn[i];
  }
  u.resize(n);
  return {normalize(ctx, UniPoly(std::move(q))), normalize(ctx, UniPoly(std::move(u)))};
}

UniPoly gcd(FieldContext& ctx, const UniPoly& a, const UniPoly& b) {
  UniPoly x = normalize(ctx, a), y = normalize(ctx, b);
  while (!y.is_zero()) {
    UniPoly r = divmod(ctx, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(ctx, x);
}

// ---- BiPoly ----

BiPoly BiPoly::constant(const FieldElem& c) { return monomial(c, 0, 0); }
BiPoly BiPoly::x() { return monomial(FieldElem(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(FieldElem(1), 0, 1); }

BiPoly BiPoly::monomial(const FieldElem& c, int i, int j) {
  BiPoly r;
  r.add_term(i, j, c);
  return r;
}

FieldElem BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? FieldElem() : it->second;
}

void BiPoly::add_term(int i, int j, const FieldElem& c) {
  if (c.is_syntactic_zero()) return;
  auto [it, fresh] = t_.try_emplace({i, j}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_syntactic_zero()) t_.erase(it);
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

int BiPoly::ord_y_on_axis() const {
  int d = -1;
  for (const auto& [k, c] : t_)
    if (k.first == 0 && (d < 0 || k.second < d)) d = k.second;
  return d;
}

int BiPoly::ord_x_on_axis() const {
  int d = -1;
  for (const auto& [k, c] : t_)
    if (k.second == 0 && (d < 0 || k.first < d)) d = k.first;
  return d;
}

int BiPoly::x_valuation() const {
  int d = -1;
  for (const auto& [k, c] : t_)
    if (d < 0 || k.first < d) d = k.first;
  return d;
}

int BiPoly::y_valuation() const {
  int d = -1;
  for (const auto& [k, c] : t_)
    if (d < 0 || k.second < d) d = k.second;
  return d;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
  return r;
}

BiPoly BiPoly::truncated_x(int max_i) const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.first <= max_i) r.t_.emplace(k, c);
  return r;
}

BiPoly BiPoly::shifted(int di, int dj) const {
  BiPoly r;
  for (const auto& [k, c] : t_) {
    if (k.first + di < 0 || k.second + dj < 0) throw InternalError("negative exponent in shift");
    r.t_.emplace(Key{k.first + di, k.second + dj}, c);
  }
  return r;
}

BiPoly BiPoly::lifted(const TowerPtr& t) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c.lifted(t));
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * FieldElem(k.second));
  return r;
}

bool BiPoly::is_base() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_base(); });
}

std::vector<UniPoly> BiPoly::as_y_poly() const {
  std::vector<std::vector<FieldElem>> c(deg_y() + 1);
  for (const auto& [k, v] : t_) {
    auto& row = c[k.second];
    if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1);
    row[k.first] = v;
  }
  std::vector<UniPoly> r;
  for (auto& row : c) r.emplace_back(std::move(row));
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const FieldElem& s) {
  Terms n;
  for (const auto& [k, c] : t_) {
    FieldElem v = c * s;
    if (!v.is_syntactic_zero()) n.emplace(k, std::move(v));
  }
  t_ = std::move(n);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r;
  for (const auto& [k, c] : a.t_) r.t_.emplace(k, -c);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  BiPoly d = a - b;
  return d.is_zero();
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly r = constant(FieldElem(1)), a = *this;
  while (n) {
    if (n & 1) r = r * a;
    n >>= 1;
    if (n) a = a * a;
  }
  return r;
}

std::string BiPoly::str(const std::string& xv, const std::string& yv) const {
  std::vector<std::pair<Key, const FieldElem*>> order;
  for (const auto& [k, c] : t_) order.emplace_back(k, &c);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::vector<std::string> terms;
  for (const auto& [k, c] : order) {
    std::string mono = power(xv, k.first);
    std::string ym = power(yv, k.second);
    if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
    terms.push_back(coeff_times(c->str(), mono));
  }
  return join_terms(terms);
}

BiPoly normalize(FieldContext& ctx, const BiPoly& f) {
  std::vector<std::pair<BiPoly::Key, FieldElem>> kept;
  for (const auto& [k, c] : f.terms())
    if (!ctx.is_zero(c)) kept.emplace_back(k, c);
  BiPoly r;
  for (const auto& [k, c] : kept) r.add_term(k.first, k.second, ctx.lift(c));
  return r;
}

// ---- Series ----

Series series_mul(const Series& a, const Series& b, int prec) {
  Series r(prec + 1);
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= prec; ++i) {
    if (a[i].is_syntactic_zero()) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= prec; ++j) {
      if (b[j].is_syntactic_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series evaluate(const BiPoly& f, const Series& X, const Series& Y, int prec) {
  const int dy = f.deg_y();
  if (dy < 0) return Series(prec + 1);
  std::vector<Series> xp{Series(prec + 1)};
  xp[0][0] = FieldElem(1);
  std::vector<Series> cj(dy + 1, Series(prec + 1));
  for (const auto& [k, c] : f.terms()) {
    while (static_cast<int>(xp.size()) <= k.first) xp.push_back(series_mul(xp.back(), X, prec));
    const Series& p = xp[k.first];
    for (int n = 0; n <= prec; ++n)
      if (!p[n].is_syntactic_zero()) cj[k.second][n] += c * p[n];
  }
  Series r = cj[dy];
  for (int j = dy - 1; j >= 0; --j) {
    r = series_mul(r, Y, prec);
    for (int n = 0; n <= prec; ++n) r[n] += cj[j][n];
  }
  return r;
}

int series_order(FieldContext& ctx, const Series& s) {
  for (size_t k = 0; k < s.size(); ++k)
    if (!ctx.is_zero(s[k])) return static_cast<int>(k);
  return -1;
}

}  // namespace singcurve::exact
