#include "singcurve/contact/intersection.hpp"

#include <algorithm>
#include <sstream>

#include "singcurve/errors.hpp"

namespace singcurve::contact {

using exact::Series;

namespace {

// number of characteristic exponents alpha_i = beta_i / m below kappa
size_t contact_level(const PuiseuxChar& c, const Rational& kappa) {
  size_t q = 0;
  while (q < c.betas.size() && Rational(c.betas[q]) < kappa * Rational(c.m)) ++q;
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q = r.get_num() / r.get_den();
  if (q * r.get_den() < r.get_num()) q += 1;
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

std::string IntersectionValue::str() const {
  if (infinite) return "inf";
  return (lower_bound ? ">= " : "") + value.get_str();
}

std::string IntersectionTrace::describe() const {
  std::ostringstream os;
  os << "substitution=" << substitution.get_str() << " corollary=" << corollary.get_str()
     << " compact=" << compact.get_str() << " pro_sum=" << pro_sum.get_str() << " kappa=" << contact.kappa.str()
     << " frame=" << contact.frame.str() << " chars=" << contact.c1.str() << "," << contact.c2.str();
  return os.str();
}

Rational corollary_formula(const PuiseuxChar& c, Integer m_other, const Rational& kappa) {
  const size_t q = contact_level(c, kappa);
  Rational s = 0;
  for (size_t i = 1; i <= q; ++i) s += Rational(c.betas[i - 1]) * Rational(c.es[i - 1] - c.es[i]);
  s += kappa * Rational(c.es[q]) * Rational(c.m);
  return Rational(m_other) / Rational(c.m) * s;
}

Rational compact_formula(const PuiseuxChar& c, Integer m_other, const Rational& kappa) {
  const size_t q = contact_level(c, kappa);
  // beta-bar_{q+1} - beta_{q+1} = (e_{q-1}/e_q) beta-bar_q - beta_q, zero for q = 0
  Rational d = 0;
  if (q > 0) d = Rational(c.es[q - 1] / c.es[q] * c.beta_bars[q] - c.betas[q - 1]);
  Rational r = Rational(c.es[q]) * Rational(m_other) / Rational(c.m) * (d + Rational(c.m) * kappa);
  r.canonicalize();
  return r;
}

std::vector<Rational> predicted_multiset(const PuiseuxChar& c, const Rational& kappa) {
  const size_t q = contact_level(c, kappa);
  std::vector<Rational> r;
  for (size_t i = 1; i <= q; ++i) {
    Rational a(c.betas[i - 1], c.m);
    a.canonicalize();
    for (auto n = c.es[i - 1] - c.es[i]; n > 0; --n) r.push_back(a);
  }
  for (auto n = c.es[q]; n > 0; --n) r.push_back(kappa);
  std::sort(r.begin(), r.end());
  return r;
}

IntersectionTrace intersection_detail(FieldContext& ctx, const Branch& b1, const Branch& b2) {
  IntersectionTrace t;
  t.contact = contact(ctx, b1, b2);
  const ContactResult& cr = t.contact;
  if (cr.kappa.infinite) {
    t.value.infinite = true;
    return t;
  }
  const Integer m2 = cr.c2.m;
  t.corollary = corollary_formula(cr.c1, m2, cr.kappa.value);
  t.compact = compact_formula(cr.c1, m2, cr.kappa.value);
  if (cr.kappa.lower_bound) {
    t.value.value = ceil_of(t.corollary);
    t.value.lower_bound = true;
    return t;
  }

  // sum over all pairs of pro-branches
  t.pro_sum = 0;
  for (int k2 = 0; k2 < cr.e2.m; ++k2) {
    ProBranch g = pro_branch(ctx, cr.e2, k2);
    for (const ContactValue& v : contact_multiset(ctx, cr.e1, g)) {
      if (v.infinite || v.lower_bound) throw InternalError("pro-branch contact undecided below the maximal contact");
      t.pro_sum += v.value;
    }
  }

  // substitution into an implicit equation of b1, truncated past its
  // characteristic and past the contact
  PuiseuxExpansion e1 = cr.e1;
  if (!e1.exact) {
    const int beta_g = cr.c1.betas.empty() ? 0 : static_cast<int>(cr.c1.betas.back());
    const Rational km = cr.kappa.value * Rational(e1.m);
    const int need = std::max(beta_g, static_cast<int>(ceil_of(km).get_si()) + 1);
    if (e1.trunc_order < need) e1 = puiseux::reframe(ctx, b1, cr.frame, need);
    e1 = puiseux::truncated(e1, need);
  }
  const exact::BiPoly D1 = puiseux::implicitize(e1);
  Integer expect = is_integer(t.corollary) ? t.corollary.get_num() : ceil_of(t.corollary);
  const int P = static_cast<int>(expect.get_si()) + 1;
  PuiseuxExpansion e2 = cr.e2;
  if (!e2.exact && e2.trunc_order < P) e2 = puiseux::reframe(ctx, b2, cr.frame, P);
  Series X(std::max(P, e2.m) + 1);
  X[e2.m] = FieldElem(1);
  const int v = exact::series_order(ctx, exact::evaluate(D1, X, e2.y_series(P), P));
  t.substitution = v < 0 ? Rational(P + 1) : Rational(v);

  if (!(t.substitution == t.corollary && t.corollary == t.compact && t.compact == t.pro_sum) ||
      !is_integer(t.corollary))
    throw InternalError("intersection paths disagree: " + t.describe());
  t.value.value = t.corollary.get_num();
  return t;
}

IntersectionValue intersection(FieldContext& ctx, const Branch& b1, const Branch& b2) {
  return intersection_detail(ctx, b1, b2).value;
}

Matrix intersection_matrix(FieldContext& ctx, const std::vector<Branch>& bs) {
  const size_t n = bs.size();
  Matrix m(n, std::vector<IntersectionValue>(n));
  for (size_t i = 0; i < n; ++i) {
    m[i][i].infinite = true;
    for (size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = intersection(ctx, bs[i], bs[j]);
  }
  return m;
}

}  // namespace singcurve::contact
