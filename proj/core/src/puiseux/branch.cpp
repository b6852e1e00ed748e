#include "singcurve/puiseux/branch.hpp"

#include <numeric>

#include "singcurve/errors.hpp"
#include "singcurve/exact/resultant.hpp"

namespace singcurve::puiseux {

using exact::Series;

Frame Frame::inverse() const {
  Rational det = a * d - b * c;
  if (det == 0) throw InternalError("singular frame");
  return {d / det, -b / det, -c / det, a / det};
}

Frame Frame::after(const Frame& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string Frame::str() const {
  if (is_identity()) return "(x,y)";
  if (is_swap()) return "(x,y) swapped";
  auto lin = [](const Rational& p, const Rational& q) {
    std::vector<std::string> ts;
    if (p != 0) ts.push_back(exact::coeff_times(exact::to_string(exact::GaussRational(p)), "x"));
    if (q != 0) ts.push_back(exact::coeff_times(exact::to_string(exact::GaussRational(q)), "y"));
    return exact::join_terms(ts);
  };
  return "(" + lin(a, b) + ", " + lin(c, d) + ")";
}

std::string Branch::str() const {
  return swapped ? expansion.str("y", "x") : expansion.str("x", "y");
}

namespace {

class NewtonSource : public ExpansionSource {
 public:
  explicit NewtonSource(std::shared_ptr<const IsolatedState> s) : s_(std::move(s)) {}
  PuiseuxExpansion expand_to(FieldContext& ctx, int order) const override {
    return continue_expansion(ctx, *s_, order);
  }

 private:
  std::shared_ptr<const IsolatedState> s_;
};

// Expansion of a parametrization whose leading coordinate is not a monomial.
class ParamSource : public ExpansionSource {
 public:
  ParamSource(Parametrization p, bool swapped) : p_(std::move(p)), swapped_(swapped) {}
  PuiseuxExpansion expand_to(FieldContext& ctx, int order) const override {
    const UniPoly& u = swapped_ ? p_.y : p_.x;
    const UniPoly& v = swapped_ ? p_.x : p_.y;
    int lo = 0;
    while (u[lo].is_syntactic_zero()) ++lo;
    const int prec = order + lo - 1;
    Series X(prec + 1), Y(prec + 1);
    for (int k = 0; k <= prec; ++k) X[k] = u[k], Y[k] = v[k];
    return reparametrize(ctx, X, Y, order);
  }

 private:
  Parametrization p_;
  bool swapped_;
};

int poly_order(const UniPoly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (!p[k].is_syntactic_zero()) return k;
  return -1;
}

bool is_monomial(const UniPoly& p) {
  int o = poly_order(p);
  return o >= 0 && o == p.degree();
}

UniPoly compress(const UniPoly& p, int d) {
  std::vector<FieldElem> c;
  for (int k = 0; k <= p.degree(); k += d) c.push_back(p[k]);
  return UniPoly(std::move(c));
}

// x = c t^n exactly: s = gamma t with gamma^n = c.
PuiseuxExpansion exact_param(FieldContext& ctx, const UniPoly& u, const UniPoly& v) {
  const int n = u.degree();
  FieldElem gi = ctx.inverse(ctx.nth_root(u.lead(), n));
  PuiseuxExpansion e;
  e.m = n;
  e.exact = true;
  FieldElem p = gi;
  for (int r = 1; r <= v.degree(); ++r, p = p * gi)
    if (!ctx.is_zero(v[r])) e.terms.emplace(r, ctx.lift(v[r] * p));
  e.trunc_order = std::max(v.degree(), n);
  for (auto& [r, c] : e.terms) c = ctx.lift(c);
  return e;
}

}  // namespace

Branch deepen(FieldContext& ctx, const Branch& b, int order) {
  if (b.expansion.exact || b.expansion.trunc_order >= order) return b;
  if (!b.source)
    throw TruncationError("expansion is only known through t^" + std::to_string(b.expansion.trunc_order) +
                          "; a deeper expansion (t^" + std::to_string(order) + ") is needed");
  Branch r = b;
  r.expansion = b.source->expand_to(ctx, order);
  return r;
}

PuiseuxExpansion normalize(const PuiseuxExpansion& e) {
  if (e.vertical) return e;
  int g = e.m;
  for (const auto& [r, c] : e.terms) g = std::gcd(g, r);
  if (g == 1) return e;
  PuiseuxExpansion r = e;
  r.m = e.m / g;
  r.terms.clear();
  for (const auto& [k, c] : e.terms) r.terms.emplace(k / g, c);
  r.trunc_order = e.trunc_order / g;
  return r;
}

Curve branches_of(FieldContext& ctx, const BiPoly& f0, const Rational& target, bool auto_reduce) {
  BiPoly f = exact::normalize(ctx, f0);
  if (f.is_zero()) throw InvalidInput("the zero polynomial defines no curve");
  if (!f.coeff(0, 0).is_syntactic_zero()) throw InvalidInput("the curve does not pass through the origin");
  if (f.is_base()) {
    BiPoly fb;
    for (const auto& [k, v] : f.terms()) fb.add_term(k.first, k.second, FieldElem(v.base_value()));
    if (!exact::is_reduced(fb)) {
      if (!auto_reduce)
        throw InvalidInput("f has a repeated factor through the origin; pass its square-free part (--reduce)");
      f = exact::normalize(ctx, exact::primitive_integral(exact::squarefree_part(fb)));
    }
  }
  Curve c;
  c.defining_poly = f;
  auto add = [&](std::vector<Solution> sols, bool swapped) {
    for (auto& s : sols) {
      Branch b;
      b.expansion = normalize(s.expansion);
      if (b.expansion.m != s.expansion.m) throw InternalError("Newton solution is not injective");
      b.swapped = swapped;
      if (s.state) b.source = std::make_shared<NewtonSource>(s.state);
      c.branches.push_back(std::move(b));
    }
  };
  ExpandOptions o1{target, LeadFilter::AtLeastOne, false};
  add(newton_solutions(ctx, f, o1), false);
  ExpandOptions o2{target, LeadFilter::GreaterThanOne, false};
  add(newton_solutions(ctx, f.swapped(), o2), true);
  for (auto& b : c.branches)
    for (auto& [r, v] : b.expansion.terms) v = ctx.lift(v);
  return c;
}

Branch from_parametrization(FieldContext& ctx, const UniPoly& x0, const UniPoly& y0) {
  UniPoly x = exact::normalize(ctx, x0), y = exact::normalize(ctx, y0);
  if (x.is_zero() && y.is_zero()) throw InvalidInput("the parametrization is constant");
  if (!x[0].is_syntactic_zero() || !y[0].is_syntactic_zero())
    throw InvalidInput("the parametrization must pass through the origin at t = 0");
  int d = 0;
  for (const UniPoly* p : {&x, &y})
    for (int k = 1; k <= p->degree(); ++k)
      if (!(*p)[k].is_syntactic_zero()) d = std::gcd(d, k);
  if (d > 1) x = compress(x, d), y = compress(y, d);

  Branch b;
  b.param = Parametrization{x, y};
  const int ox = poly_order(x), oy = poly_order(y);
  b.swapped = ox < 0 || (oy >= 0 && oy < ox);
  const UniPoly& u = b.swapped ? y : x;
  const UniPoly& v = b.swapped ? x : y;
  if (is_monomial(u)) {
    b.expansion = normalize(exact_param(ctx, u, v));
    if (b.expansion.m != u.degree()) throw InternalError("normalized parametrization is not injective");
    return b;
  }
  auto src = std::make_shared<ParamSource>(*b.param, b.swapped);
  const int n = poly_order(u);
  int order = 4 * n + 8;
  b.expansion = src->expand_to(ctx, order);
  b.source = src;
  return b;
}

std::pair<FieldElem, FieldElem> tangent_direction(const Branch& b) {
  const PuiseuxExpansion& e = b.expansion;
  FieldElem du(1), dv(0);
  if (e.vertical) {
    du = FieldElem(0);
    dv = FieldElem(1);
  } else if (!e.terms.empty() && e.order() < e.m) {
    du = FieldElem(0);
    dv = FieldElem(1);
  } else if (!e.terms.empty() && e.order() == e.m) {
    dv = e.terms.begin()->second;
  }
  if (b.swapped) std::swap(du, dv);
  return {du, dv};
}

Implicit implicitize(FieldContext& ctx, const Branch& b) {
  if (b.param) {
    if (is_monomial(b.param->x)) return {exact::normalize(ctx, implicitize(exact_param(ctx, b.param->x, b.param->y))), false};
    if (is_monomial(b.param->y))
      return {exact::normalize(ctx, implicitize(exact_param(ctx, b.param->y, b.param->x))).swapped(), false};
  }
  BiPoly D = exact::normalize(ctx, implicitize(b.expansion));
  return {b.swapped ? D.swapped() : D, !b.expansion.exact};
}

std::optional<int> conjugacy_twist(FieldContext& ctx, const PuiseuxExpansion& p, const PuiseuxExpansion& q) {
  if (p.m != q.m || p.vertical != q.vertical) return std::nullopt;
  const bool both_exact = p.exact && q.exact;
  const int O = both_exact ? std::max(p.trunc_order, q.trunc_order) : std::min(p.exact ? q.trunc_order : p.trunc_order,
                                                                              q.exact ? p.trunc_order : q.trunc_order);
  std::vector<std::pair<int, std::pair<FieldElem, FieldElem>>> pairs;
  auto get = [](const PuiseuxExpansion& e, int r) {
    auto it = e.terms.find(r);
    return it == e.terms.end() ? FieldElem(0) : it->second;
  };
  std::vector<int> exps;
  for (const auto& [r, c] : p.terms)
    if (r <= O) exps.push_back(r);
  for (const auto& [r, c] : q.terms)
    if (r <= O && !p.terms.count(r)) exps.push_back(r);
  if (p.m == 1) {
    for (int r : exps)
      if (!ctx.is_zero(get(p, r) - get(q, r))) return std::nullopt;
    return 0;
  }
  FieldElem z = ctx.root_of_unity(p.m);
  for (int k = 0; k < p.m; ++k) {
    FieldElem zk = z.pow(k);
    bool ok = true;
    for (int r : exps) {
      if (!ctx.is_zero(zk.pow(r) * get(p, r) - get(q, r))) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace singcurve::puiseux
