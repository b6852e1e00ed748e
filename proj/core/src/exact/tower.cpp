#include "singcurve/exact/tower.hpp"

#include <algorithm>
#include <utility>

#include "singcurve/errors.hpp"

namespace singcurve::exact {

namespace coords {

namespace {

using Poly = Tower::Poly;

void trim(Poly& v, int cd) {
  while (!v.empty() && is_zero(v.back(), cd)) v.pop_back();
}

Coords wrap(Poly v) {
  Coords r;
  r.c = std::move(v);
  return r;
}

Poly poly_add(const Poly& a, const Poly& b, int cd) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = b[i];
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = add(a[i], b[i], cd);
  }
  trim(r, cd);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, int cd) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = neg(b[i], cd);
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = sub(a[i], b[i], cd);
  }
  trim(r, cd);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int cd, const Tower& t) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i], cd)) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j], cd)) continue;
      r[i + j] = add(r[i + j], mul(a[i], b[j], cd, t), cd);
    }
  }
  trim(r, cd);
  return r;
}

// Remainder modulo a monic polynomial.
void rem_monic(Poly& v, const Poly& m, int cd, const Tower& t) {
  const size_t n = m.size() - 1;
  for (size_t k = v.size(); k-- > n;) {
    if (is_zero(v[k], cd)) continue;
    Coords lead = v[k];
    for (size_t i = 0; i < n; ++i) v[k - n + i] = sub(v[k - n + i], mul(lead, m[i], cd, t), cd);
    v[k] = Coords{};
  }
  if (v.size() > n) v.resize(n);
  trim(v, cd);
}

std::pair<Poly, Poly> divmod(Poly u, const Poly& v, int cd, const Tower& t) {
  Coords inv = inverse(v.back(), cd, t);
  const size_t n = v.size() - 1;
  if (u.size() < v.size()) return {{}, u};
  Poly q(u.size() - n);
  for (size_t k = u.size(); k-- > n;) {
    if (is_zero(u[k], cd)) continue;
    Coords f = mul(u[k], inv, cd, t);
    q[k - n] = f;
    for (size_t i = 0; i <= n; ++i) u[k - n + i] = sub(u[k - n + i], mul(f, v[i], cd, t), cd);
  }
  u.resize(n);
  trim(u, cd);
  trim(q, cd);
  return {q, u};
}

}  // namespace

bool is_zero(const Coords& a, int d) { return d == 0 ? a.g.is_zero() : a.c.empty(); }

Coords constant(const GaussRational& g, int d) {
  if (d == 0) return Coords{g, {}};
  if (g.is_zero()) return Coords{};
  return wrap({constant(g, d - 1)});
}

Coords embed(const Coords& a, int from, int to) {
  if (from == to) return a;
  if (is_zero(a, from)) return Coords{};
  return wrap({embed(a, from, to - 1)});
}

Coords add(const Coords& a, const Coords& b, int d) {
  if (d == 0) return Coords{a.g + b.g, {}};
  return wrap(poly_add(a.c, b.c, d - 1));
}

Coords sub(const Coords& a, const Coords& b, int d) {
  if (d == 0) return Coords{a.g - b.g, {}};
  return wrap(poly_sub(a.c, b.c, d - 1));
}

Coords neg(const Coords& a, int d) {
  if (d == 0) return Coords{-a.g, {}};
  Coords r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(neg(x, d - 1));
  return r;
}

Coords mul(const Coords& a, const Coords& b, int d, const Tower& t) {
  if (d == 0) return Coords{a.g * b.g, {}};
  if (a.c.empty() || b.c.empty()) return Coords{};
  Poly p = poly_mul(a.c, b.c, d - 1, t);
  rem_monic(p, t.modulus(d), d - 1, t);
  return wrap(std::move(p));
}

Coords reduce(const Coords& a, int d, const Tower& t) {
  if (d == 0) return a;
  Poly p;
  p.reserve(a.c.size());
  for (const auto& x : a.c) p.push_back(reduce(x, d - 1, t));
  trim(p, d - 1);
  rem_monic(p, t.modulus(d), d - 1, t);
  return wrap(std::move(p));
}

Coords inverse(const Coords& a, int d, const Tower& t) {
  if (is_zero(a, d)) throw InvalidInput("inverse of zero");
  if (d == 0) return Coords{a.g.inverse(), {}};
  const int cd = d - 1;
  if (a.c.size() == 1) return wrap({inverse(a.c[0], cd, t)});

  Poly r0 = t.modulus(d), r1 = a.c;
  Poly t0, t1{constant(GaussRational(1), cd)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, cd, t);
    Poly tn = poly_sub(t0, poly_mul(q, t1, cd, t), cd);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (r0.size() > 1) {
    Coords inv = inverse(r0.back(), cd, t);
    for (auto& x : r0) x = mul(x, inv, cd, t);
    throw ZeroDivisorFound{d, std::move(r0)};
  }
  Coords inv = inverse(r0[0], cd, t);
  for (auto& x : t0) x = mul(x, inv, cd, t);
  trim(t0, cd);
  rem_monic(t0, t.modulus(d), cd, t);
  return wrap(std::move(t0));
}

bool is_constant(const Coords& a, int d) {
  if (d == 0) return true;
  if (a.c.empty()) return true;
  if (a.c.size() > 1) return false;
  return is_constant(a.c[0], d - 1);
}

GaussRational constant_value(const Coords& a, int d) {
  if (d == 0) return a.g;
  if (a.c.empty()) return GaussRational();
  if (a.c.size() > 1) throw InternalError("element is not a base-field constant");
  return constant_value(a.c[0], d - 1);
}

namespace {

bool compound(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') return true;
  return false;
}

}  // namespace

std::string to_string(const Coords& a, int d) {
  if (d == 0) return exact::to_string(a.g);
  if (a.c.empty()) return "0";
  std::string var = "a" + std::to_string(d);
  std::string out;
  for (size_t k = a.c.size(); k-- > 0;) {
    if (is_zero(a.c[k], d - 1)) continue;
    std::string s = to_string(a.c[k], d - 1);
    std::string term;
    if (k == 0) {
      term = s;
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (s == "1")
        term = mono;
      else if (s == "-1")
        term = "-" + mono;
      else
        term = (compound(s) ? "(" + s + ")" : s) + "*" + mono;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

Tower::Poly div_monic(const Tower::Poly& a, const Tower::Poly& m, int cd, const Tower& t) {
  auto [q, r] = divmod(a, m, cd, t);
  if (!r.empty()) throw InternalError("inexact division by a monic factor");
  return q;
}

}  // namespace coords

const TowerPtr& Tower::base() {
  static const TowerPtr b = std::make_shared<const Tower>();
  return b;
}

bool Tower::descends_from(const Tower* other) const {
  if (other == base().get()) return true;
  for (const Tower* p = this; p; p = p->parent_.get())
    if (p == other) return true;
  return false;
}

TowerPtr Tower::with_level(const TowerPtr& t, Poly monic) {
  auto r = std::make_shared<Tower>();
  r->levels_ = t->levels_;
  r->levels_.push_back(std::move(monic));
  r->parent_ = t;
  return r;
}

TowerPtr Tower::with_split(const TowerPtr& t, int k, Poly factor) {
  auto r = std::make_shared<Tower>();
  r->parent_ = t;
  r->levels_.assign(t->levels_.begin(), t->levels_.begin() + (k - 1));
  r->levels_.push_back(std::move(factor));
  for (int j = k + 1; j <= t->depth(); ++j) {
    Poly m;
    for (const auto& x : t->modulus(j)) m.push_back(coords::reduce(x, j - 1, *r));
    r->levels_.push_back(std::move(m));
  }
  return r;
}

std::string Tower::describe() const {
  std::string out;
  for (int k = 1; k <= depth(); ++k) {
    Coords m;
    m.c = modulus(k);
    if (!out.empty()) out += "; ";
    out += coords::to_string(m, k) + " = 0";
  }
  return out;
}

FieldElem::FieldElem() : tower_(Tower::base()) {}
FieldElem::FieldElem(long v) : tower_(Tower::base()), c_{GaussRational(v), {}} {}
FieldElem::FieldElem(const Rational& r) : tower_(Tower::base()), c_{GaussRational(r), {}} {}
FieldElem::FieldElem(const GaussRational& g) : tower_(Tower::base()), c_{g, {}} {}
FieldElem::FieldElem(TowerPtr t, Coords c) : tower_(std::move(t)), c_(std::move(c)) {}

FieldElem FieldElem::generator(const TowerPtr& t, int k) {
  Coords g;
  g.c = {Coords{}, coords::constant(GaussRational(1), k - 1)};
  g = coords::reduce(g, k, *t);
  return FieldElem(t, coords::embed(g, k, t->depth()));
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  if (a->descends_from(b.get())) return a;
  if (b->descends_from(a.get())) return b;
  throw InternalError("elements from unrelated extension towers");
}

FieldElem FieldElem::lifted(const TowerPtr& t) const {
  if (t == tower_) return *this;
  if (!t->descends_from(tower_.get())) throw InternalError("cannot lift into an unrelated tower");
  const int d = depth();
  if (d == 0) return FieldElem(t, coords::constant(c_.g, t->depth()));
  return FieldElem(t, coords::embed(coords::reduce(c_, d, *t), d, t->depth()));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (tower_ != o.tower_) {
    TowerPtr t = common_tower(tower_, o.tower_);
    *this = lifted(t);
    return *this += o.lifted(t);
  }
  c_ = coords::add(c_, o.c_, depth());
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  if (tower_ != o.tower_) {
    TowerPtr t = common_tower(tower_, o.tower_);
    *this = lifted(t);
    return *this -= o.lifted(t);
  }
  c_ = coords::sub(c_, o.c_, depth());
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (tower_ != o.tower_) {
    TowerPtr t = common_tower(tower_, o.tower_);
    *this = lifted(t);
    return *this *= o.lifted(t);
  }
  c_ = coords::mul(c_, o.c_, depth(), *tower_);
  return *this;
}

FieldElem operator-(const FieldElem& a) { return FieldElem(a.tower_, coords::neg(a.c_, a.depth())); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.tower_ == b.tower_) return a.c_ == b.c_;
  TowerPtr t = common_tower(a.tower_, b.tower_);
  return a.lifted(t).c_ == b.lifted(t).c_;
}

FieldElem FieldElem::pow(unsigned n) const {
  FieldElem r = FieldElem(1).lifted(tower_), a = *this;
  while (n) {
    if (n & 1) r *= a;
    a *= a;
    n >>= 1;
  }
  return r;
}

std::string FieldElem::str() const { return coords::to_string(c_, depth()); }

}  // namespace singcurve::exact
