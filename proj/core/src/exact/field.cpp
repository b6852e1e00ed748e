#include "singcurve/exact/field.hpp"

#include "singcurve/errors.hpp"
#include "singcurve/exact/cyclotomic.hpp"
#include "singcurve/exact/resultant.hpp"

namespace singcurve::exact {

namespace {

// Divisors of |n| if n is small enough to factor by trial division.
std::vector<Integer> small_divisors(Integer n) {
  n = abs(n);
  if (n > Integer("1000000000000")) return {};
  std::vector<Integer> out{1};
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    size_t sz = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  if (n > 1) {
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * n);
  }
  return out;
}

// A rational root of a polynomial with rational coefficients, if one is
// found by the rational root test.
std::optional<Rational> find_rational_root(const UniPoly& q) {
  std::vector<Rational> c;
  for (const auto& e : q.coeffs()) c.push_back(e.base_value().re);
  if (sgn(c[0]) == 0) return Rational(0);
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& v : c) z.push_back(Integer(v * l));
  auto ps = small_divisors(z.front()), qs = small_divisors(z.back());
  if (ps.empty() || qs.empty()) return std::nullopt;
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        Rational v = 0;
        for (size_t k = c.size(); k-- > 0;) v = v * r + c[k];
        if (sgn(v) == 0) return r;
      }
  return std::nullopt;
}

UniPoly linear(const FieldElem& root) { return UniPoly({-root, FieldElem(1)}); }

}  // namespace

void FieldContext::split(const ZeroDivisorFound& z) {
  const Tower& t = *tower_;
  auto complement = coords::div_monic(t.modulus(z.level), z.factor, z.level - 1, t);
  bool take_factor = z.factor.size() <= complement.size();
  tower_ = Tower::with_split(tower_, z.level, take_factor ? z.factor : complement);
  ++splits_;
}

bool FieldContext::is_zero(const FieldElem& e) {
  for (;;) {
    FieldElem x = lift(e);
    if (x.is_syntactic_zero()) return true;
    try {
      coords::inverse(x.coords(), x.depth(), *tower_);
      return false;
    } catch (const ZeroDivisorFound& z) {
      split(z);
    }
  }
}

FieldElem FieldContext::inverse(const FieldElem& e) {
  for (;;) {
    FieldElem x = lift(e);
    if (x.is_syntactic_zero()) throw InvalidInput("division by zero");
    try {
      return FieldElem(tower_, coords::inverse(x.coords(), x.depth(), *tower_));
    } catch (const ZeroDivisorFound& z) {
      split(z);
    }
  }
}

FieldElem FieldContext::adjoin_root(const UniPoly& p) {
  UniPoly q = monic(*this, squarefree_part(*this, p));
  if (q.degree() < 1) throw InvalidInput("cannot adjoin a root of a constant polynomial");
  if (q.degree() == 1) return lift(-q[0]);
  Tower::Poly m;
  for (const auto& c : q.coeffs()) m.push_back(lift(c).coords());
  tower_ = Tower::with_level(tower_, std::move(m));
  return FieldElem::generator(tower_, tower_->depth());
}

std::vector<FieldElem> FieldContext::roots(const UniPoly& p) {
  if (normalize(*this, p).degree() < 1) throw InvalidInput("roots of a constant polynomial");
  UniPoly q = monic(*this, squarefree_part(*this, p));
  std::vector<FieldElem> out;
  while (q.degree() >= 1) {
    if (q.degree() == 1) {
      out.push_back(lift(-q[0]));
      break;
    }
    if (q.is_base()) {
      auto r = base_roots(q);
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    FieldElem a = adjoin_root(q);
    out.push_back(a);
    q = div_monic(q, linear(a));
  }
  for (auto& r : out) r = lift(r);
  return out;
}

std::vector<FieldElem> FieldContext::base_roots(UniPoly q) {
  std::vector<FieldElem> out;
  bool real = true;
  for (const auto& c : q.coeffs()) real = real && c.base_value().is_real();
  while (real && q.degree() >= 2) {
    auto r = find_rational_root(q);
    if (!r) break;
    out.emplace_back(*r);
    q = div_monic(q, linear(FieldElem(*r)));
  }
  const int n = q.degree();
  if (n == 1) {
    out.push_back(-q[0]);
    return out;
  }
  if (n == 2) {
    GaussRational b = q[1].base_value(), c = q[0].base_value();
    GaussRational disc = b * b - GaussRational(4) * c;
    FieldElem s;
    if (auto r = gauss_sqrt(disc))
      s = FieldElem(*r);
    else
      s = adjoin_root(UniPoly({FieldElem(-disc), FieldElem(0), FieldElem(1)}));
    FieldElem half(Rational(1, 2));
    out.push_back(lift((-q[1] + s) * half));
    out.push_back(lift((-q[1] - s) * half));
    return out;
  }
  if (n >= 3) {
    bool binomial = true;
    for (int k = 1; k < n; ++k) binomial = binomial && q[k].is_syntactic_zero();
    if (binomial) {
      GaussRational c = -q[0].base_value();
      FieldElem s;
      if (auto r = gauss_root(c, n))
        s = FieldElem(*r);
      else
        s = adjoin_root(UniPoly::monomial(FieldElem(1), n) - UniPoly({FieldElem(c)}));
      FieldElem z = root_of_unity(n), w = s;
      for (int k = 0; k < n; ++k) {
        out.push_back(lift(w));
        w *= z;
      }
      return out;
    }
    while (q.degree() >= 1) {
      if (q.degree() == 1) {
        out.push_back(lift(-q[0]));
        break;
      }
      FieldElem a = adjoin_root(q);
      out.push_back(a);
      q = div_monic(q, linear(a));
    }
  }
  return out;
}

FieldElem FieldContext::nth_root(const FieldElem& a, int n) {
  if (n < 1) throw InvalidInput("root index must be positive");
  FieldElem x = lift(a);
  if (n == 1 || is_zero(x)) return lift(x);
  x = lift(x);
  if (x.is_base()) {
    GaussRational g = x.base_value();
    if (auto r = gauss_root(g, n)) return lift(FieldElem(*r));
    if (g.is_real() && sgn(g.re) < 0 && n % 2 == 0)
      if (auto r = rational_root(-g.re, n)) return lift(FieldElem(*r) * root_of_unity(2 * n));
  }
  return adjoin_root(UniPoly::monomial(FieldElem(1), n) - UniPoly({x}));
}

FieldElem FieldContext::root_of_unity(int n) {
  if (n < 1) throw InvalidInput("root of unity order must be positive");
  if (n == 1) return lift(FieldElem(1));
  if (n == 2) return lift(FieldElem(-1));
  if (n == 4) return lift(FieldElem::i());
  auto it = unity_.find(n);
  if (it != unity_.end()) return lift(it->second);
  FieldElem z = adjoin_root(cyclotomic(n));
  unity_.emplace(n, z);
  return lift(z);
}

InvertResult try_invert(const FieldElem& e) {
  if (e.is_syntactic_zero()) return Zero{};
  const TowerPtr& t = e.tower();
  try {
    return Inverse{FieldElem(t, coords::inverse(e.coords(), e.depth(), *t))};
  } catch (const ZeroDivisorFound& z) {
    auto complement = coords::div_monic(t->modulus(z.level), z.factor, z.level - 1, *t);
    return Split{Tower::with_split(t, z.level, z.factor), Tower::with_split(t, z.level, complement)};
  }
}

}  // namespace singcurve::exact
