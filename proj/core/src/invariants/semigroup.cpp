#include "singcurve/invariants/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "singcurve/errors.hpp"

namespace singcurve::invariants {

namespace {

std::vector<bool> member_table(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> t(limit + 1, false);
  t[0] = true;
  for (Int n = 1; n <= limit; ++n)
    for (Int g : gens)
      if (g <= n && t[n - g]) {
        t[n] = true;
        break;
      }
  return t;
}

}  // namespace

std::vector<Int> Semigroup::gaps() const {
  std::vector<Int> r;
  for (Int n = 0; n < conductor; ++n)
    if (!table[n]) r.push_back(n);
  return r;
}

std::vector<Int> Semigroup::small_elements() const {
  std::vector<Int> r;
  for (Int n = 0; n < conductor; ++n)
    if (table[n]) r.push_back(n);
  return r;
}

Int frobenius_formula(const PuiseuxChar& c) {
  Int n = -1;
  for (size_t q = 1; q < c.es.size(); ++q) n += (c.es[q - 1] - c.es[q]) * (c.betas[q - 1] - 1);
  return n;
}

Semigroup semigroup_of(const PuiseuxChar& c) {
  Semigroup s;
  s.generators = c.beta_bars.empty() ? beta_bars(c) : c.beta_bars;
  s.conductor = frobenius_formula(c) + 1;
  s.table = member_table(s.generators, s.conductor);
  s.delta = static_cast<Int>(std::count(s.table.begin(), s.table.begin() + s.conductor, false));
  return s;
}

Semigroup generated_semigroup(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), Int(0)), gens.end());
  if (gens.empty()) throw InvalidInput("a semigroup needs a positive generator");
  for (Int g : gens)
    if (g < 0) throw InvalidInput("semigroup generators must be positive");
  Int g = 0;
  for (Int v : gens) g = std::gcd(g, v);
  if (g != 1) throw InvalidInput("semigroup generators are not coprime (gcd " + std::to_string(g) + ")");
  // every residue class mod gens[0] is hit below gens[0] * max
  const Int limit = gens[0] * gens.back() + 1;
  std::vector<bool> t = member_table(gens, limit);
  Int last_gap = -1;
  for (Int n = 0; n <= limit; ++n)
    if (!t[n]) last_gap = n;
  Semigroup s;
  s.generators = gens;
  s.conductor = last_gap + 1;
  s.table.assign(t.begin(), t.begin() + s.conductor + 1);
  s.delta = static_cast<Int>(std::count(s.table.begin(), s.table.begin() + s.conductor, false));
  return s;
}

PuiseuxChar char_from_semigroup(const std::vector<Int>& gens) {
  Semigroup s = generated_semigroup(gens);
  std::vector<Int> bb, es;
  Int m = 0;
  for (Int n = 1; n <= s.conductor + 1; ++n)
    if (s.contains(n)) {
      m = n;
      break;
    }
  bb.push_back(m);
  es.push_back(m);
  while (es.back() != 1) {
    Int e = es.back(), n = bb.back() + 1;
    while (!(s.contains(n) && n % e != 0)) ++n;
    bb.push_back(n);
    es.push_back(std::gcd(e, n));
  }
  std::vector<Int> betas;
  for (size_t q = 1; q < bb.size(); ++q) {
    if (q == 1)
      betas.push_back(bb[1]);
    else
      betas.push_back(bb[q] - es[q - 2] / es[q - 1] * bb[q - 1] + betas.back());
  }
  PuiseuxChar c;
  try {
    c = make_char(m, betas);
  } catch (const InvalidInput&) {
    throw InvalidInput("not the semigroup of a plane branch");
  }
  Semigroup back = semigroup_of(c);
  if (back.conductor != s.conductor || back.table != s.table)
    throw InvalidInput("not the semigroup of a plane branch");
  return c;
}

}  // namespace singcurve::invariants
