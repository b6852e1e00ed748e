#include "singcurve/exact/cyclotomic.hpp"

#include <map>

#include "singcurve/errors.hpp"

namespace singcurve::exact {

void int_trim(IntPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  int_trim(r);
  return r;
}

bool int_divexact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  if (b.empty()) throw InvalidInput("division by the zero polynomial");
  q.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  IntPoly u = a;
  const size_t n = b.size() - 1;
  q.assign(u.size() - n, Integer(0));
  for (size_t k = u.size(); k-- > n;) {
    if (sgn(u[k]) == 0) continue;
    if (!mpz_divisible_p(u[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = u[k] / b.back();
    q[k - n] = f;
    for (size_t i = 0; i <= n; ++i) u[k - n + i] -= f * b[i];
  }
  for (size_t k = 0; k < n; ++k)
    if (sgn(u[k]) != 0) return false;
  int_trim(q);
  return true;
}

std::string int_str(const IntPoly& a, const std::string& var) {
  std::vector<std::string> terms;
  for (size_t k = a.size(); k-- > 0;) {
    if (sgn(a[k]) == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    terms.push_back(coeff_times(a[k].get_str(), mono));
  }
  return join_terms(terms);
}

IntPoly int_binomial(int n) {
  IntPoly r(n + 1, Integer(0));
  r[0] = -1;
  r[n] = 1;
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long>(d) * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly cyclotomic_int(int d) {
  if (d <= 0) throw InvalidInput("cyclotomic index must be positive");
  std::map<int, IntPoly> table;
  for (int e : divisors(d)) {
    IntPoly p = int_binomial(e);
    for (int f : divisors(e)) {
      if (f == e) break;
      IntPoly q;
      if (!int_divexact(p, table.at(f), q)) throw InternalError("cyclotomic division was inexact");
      p = std::move(q);
    }
    table.emplace(e, std::move(p));
  }
  return table.at(d);
}

UniPoly cyclotomic(int d) {
  std::vector<FieldElem> c;
  for (const auto& v : cyclotomic_int(d)) c.emplace_back(Rational(v));
  return UniPoly(std::move(c));
}

}  // namespace singcurve::exact
