#include "singcurve/knots/symbol.hpp"

#include <numeric>
#include <vector>

#include "singcurve/errors.hpp"

namespace singcurve::knots {

using exact::Integer;

namespace {

int mobius(Int n) {
  int mu = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

Int totient(Int n) {
  Int r = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  return n > 1 ? r - r / n : r;
}

IntPoly power(const IntPoly& a, Int k) {
  IntPoly r{Integer(1)};
  for (Int i = 0; i < k; ++i) r = exact::int_mul(r, a);
  return r;
}

}  // namespace

void Symbol::add(Int n, Int a) {
  if (n < 1) throw InvalidInput("symbol indices must be positive");
  if (a == 0) return;
  Int& v = terms[n];
  v += a;
  if (v == 0) terms.erase(n);
}

Symbol& Symbol::operator+=(const Symbol& o) {
  for (const auto& [n, a] : o.terms) add(n, a);
  return *this;
}

std::string Symbol::str() const {
  std::vector<std::string> ts;
  auto one = [](Int n, Int a) {
    std::string s = "S(" + std::to_string(n) + ")";
    return a == 1 ? s : std::to_string(a) + "*" + s;
  };
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    if (it->second > 0) ts.push_back(one(it->first, it->second));
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    if (it->second < 0) ts.push_back("-" + one(it->first, -it->second));
  return exact::join_terms(ts);
}

Symbol torus_symbol(Int p, Int q) {
  if (p < 1 || q < 1) throw InvalidInput("torus knot parameters must be positive");
  if (std::gcd(p, q) != 1) throw InvalidInput("(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
  Symbol s;
  s.add(p * q, 1);
  s.add(1, 1);
  s.add(p, -1);
  s.add(q, -1);
  return s;
}

Symbol cable_symbol(const Symbol& s, Int p, Int q) {
  Symbol t = torus_symbol(p, q);
  Symbol r;
  for (const auto& [n, a] : s.terms) r.add(p * n, a);
  r += t;
  return r;
}

std::map<Int, Int> cyclotomic_form(const Symbol& s) {
  std::map<Int, Int> m;
  for (const auto& [n, a] : s.terms)
    for (int d : exact::divisors(static_cast<int>(n))) m[d] += a;
  std::map<Int, Int> r;
  for (const auto& [d, k] : m) {
    if (k < 0)
      throw InvalidInput("not a polynomial: Phi_" + std::to_string(d) + " has multiplicity " + std::to_string(k));
    if (k > 0) r.emplace(d, k);
  }
  return r;
}

IntPoly canonical(IntPoly p) {
  exact::int_trim(p);
  if (p.empty()) throw InvalidInput("the zero polynomial has no canonical form");
  size_t k = 0;
  while (sgn(p[k]) == 0) ++k;
  p.erase(p.begin(), p.begin() + k);
  if (sgn(p[0]) < 0)
    for (auto& c : p) c = -c;
  return p;
}

IntPoly expand_symbol(const Symbol& s) {
  cyclotomic_form(s);
  IntPoly num{Integer(1)}, den{Integer(1)};
  for (const auto& [n, a] : s.terms) {
    IntPoly b = exact::int_binomial(static_cast<int>(n));
    if (a > 0)
      num = exact::int_mul(num, power(b, a));
    else
      den = exact::int_mul(den, power(b, -a));
  }
  IntPoly q;
  if (!exact::int_divexact(num, den, q)) throw InternalError("symbol division is not exact");
  return canonical(q);
}

Symbol symbol_of_polynomial(const IntPoly& p0) {
  IntPoly p = canonical(p0);
  Symbol s;
  for (Int d = 1; p.size() > 1; ++d) {
    const Int deg = static_cast<Int>(p.size()) - 1;
    if (d > 6 && d > deg * deg) break;
    if (totient(d) > deg) continue;
    IntPoly phi = exact::cyclotomic_int(static_cast<int>(d)), q;
    while (p.size() > 1 && exact::int_divexact(p, phi, q)) {
      p = canonical(q);
      for (int k : exact::divisors(static_cast<int>(d))) s.add(k, mobius(d / k));
    }
  }
  if (p.size() != 1 || p[0] != 1) throw InvalidInput("not a product of cyclotomic polynomials");
  return s;
}

}  // namespace singcurve::knots
