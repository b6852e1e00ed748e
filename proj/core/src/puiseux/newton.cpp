#include "singcurve/puiseux/newton.hpp"

#include <algorithm>
#include <numeric>

#include "singcurve/errors.hpp"

namespace singcurve::puiseux {

using exact::Integer;
using exact::Series;

NewtonPolygon newton_polygon(const BiPoly& f) {
  if (f.is_zero()) throw InvalidInput("Newton polygon of the zero polynomial");
  if (!f.coeff(0, 0).is_syntactic_zero()) throw InvalidInput("the curve does not pass through the origin");
  const int m0 = f.ord_y_on_axis();
  if (m0 < 0) throw InvalidInput("x divides f; strip the factor first");

  NewtonPolygon p;
  for (const auto& [k, c] : f.terms()) p.support.push_back(k);

  int r = 0, s = m0;
  while (s > 0) {
    int bi = -1, bj = -1;
    for (const auto& [i, j] : p.support) {
      if (j >= s) continue;
      if (bi < 0) {
        bi = i, bj = j;
        continue;
      }
      // compare (i - r)/(s - j) with (bi - r)/(s - bj)
      long lhs = static_cast<long>(i - r) * (s - bj), rhs = static_cast<long>(bi - r) * (s - j);
      if (lhs < rhs || (lhs == rhs && j < bj)) bi = i, bj = j;
    }
    if (bi < 0) break;
    int dr = bi - r, ds = s - bj, g = std::gcd(dr, ds);
    p.edges.push_back(Edge{r, s, dr / g, ds / g, g});
    r = bi;
    s = bj;
  }
  return p;
}

UniPoly edge_polynomial(const BiPoly& f, const Edge& e) {
  std::vector<FieldElem> c(e.k + 1);
  for (int l = 0; l <= e.k; ++l) c[e.k - l] = f.coeff(e.r0 + l * e.a, e.s0 - l * e.b);
  return UniPoly(std::move(c));
}

BiPoly newton_step(const BiPoly& f, const Edge& e, const FieldElem& c0) {
  const int shift = e.b * e.r0 + e.a * e.s0;
  const int dy = f.deg_y();
  std::vector<FieldElem> cp{FieldElem(1)};
  for (int j = 1; j <= dy; ++j) cp.push_back(cp.back() * c0);
  BiPoly r;
  for (const auto& [k, c] : f.terms()) {
    const auto [i, j] = k;
    const int xe = e.b * i + e.a * j - shift;
    if (xe < 0) throw InternalError("Newton step is not divisible by the edge monomial");
    Integer binom = 1;
    for (int q = 0; q <= j; ++q) {
      r.add_term(xe, q, c * cp[j - q] * FieldElem(Rational(binom)));
      binom = binom * (j - q) / (q + 1);
    }
  }
  return r;
}

std::string PuiseuxExpansion::str(const std::string& xv, const std::string& yv) const {
  if (vertical) return xv + " = 0, " + yv + " = t";
  std::string xs = xv + " = " + (m == 1 ? std::string("t") : "t^" + std::to_string(m));
  std::vector<std::string> ts;
  for (const auto& [r, c] : terms) {
    std::string mono = r == 1 ? "t" : "t^" + std::to_string(r);
    ts.push_back(exact::coeff_times(c.str(), mono));
  }
  std::string ys = exact::join_terms(ts);
  if (!exact) {
    std::string o = "O(t^" + std::to_string(trunc_order + 1) + ")";
    ys = ts.empty() ? o : ys + " + " + o;
  }
  return xs + ", " + yv + " = " + ys;
}

Series PuiseuxExpansion::y_series(int prec) const {
  Series s(prec + 1);
  for (const auto& [r, c] : terms)
    if (r <= prec) s[r] = c;
  return s;
}

PuiseuxExpansion truncated(const PuiseuxExpansion& e, int order) {
  PuiseuxExpansion r = e;
  r.terms.clear();
  for (const auto& [k, c] : e.terms)
    if (k <= order) r.terms.emplace(k, c);
  r.exact = e.exact && r.terms.size() == e.terms.size();
  r.trunc_order = r.exact ? std::max(order, e.trunc_order) : std::min(order, e.trunc_order);
  if (r.exact && !r.terms.empty()) r.trunc_order = std::max(r.trunc_order, r.terms.rbegin()->first);
  return r;
}

int required_order(int m, const std::map<int, FieldElem>& terms, const Rational& target) {
  int e = m, n = -1, last = 0;
  for (const auto& [r, c] : terms) {
    if (e == 1) break;
    if (r % e == 0) continue;
    int ne = std::gcd(e, r);
    n += (e - ne) * (r - 1);
    e = ne;
    last = r;
  }
  Rational tm = target * m;
  mpz_class t = tm.get_num() / tm.get_den();
  if (t * tm.get_den() < tm.get_num()) t += 1;
  return std::max({static_cast<int>(t.get_si()), n + 1, last}) + m;
}

namespace {

bool vanishes_exactly(FieldContext& ctx, const BiPoly& f, int m, const std::map<int, FieldElem>& P) {
  const int py = P.empty() ? 0 : P.rbegin()->first;
  const int prec = std::max(f.deg_x(), 0) * m + std::max(f.deg_y(), 0) * py;
  Series X(prec + 1), Y(prec + 1);
  X[m] = FieldElem(1);
  for (const auto& [r, c] : P) Y[r] = c;
  Series v = exact::evaluate(f, X, Y, prec);
  return exact::series_order(ctx, v) < 0;
}

}  // namespace

namespace {

// P is this solution exactly: f(t^m, P) = 0 and, replaying the steps on the
// untruncated state, y_k = 0 solves it. The first test alone also accepts a
// factor stripped off earlier (another branch with the same truncation).
bool own_root(FieldContext& ctx, const IsolatedState& s, const std::map<int, FieldElem>& P,
              const std::vector<std::pair<int, FieldElem>>& steps) {
  if (!vanishes_exactly(ctx, s.original, s.m, P)) return false;
  BiPoly f = s.f;
  for (const auto& [ax, c] : steps) f = newton_step(exact::normalize(ctx, f), Edge{0, 1, ax, 1, 1}, c);
  return exact::normalize(ctx, f).ord_x_on_axis() < 0;
}

}  // namespace

PuiseuxExpansion continue_expansion(FieldContext& ctx, const IsolatedState& s, int order) {
  BiPoly f = s.f;
  std::map<int, FieldElem> P = s.P;
  std::vector<std::pair<int, FieldElem>> steps;
  int E = s.E;
  PuiseuxExpansion out;
  out.m = s.m;
  for (;;) {
    if (E >= order) {
      out.trunc_order = E;
      out.exact = own_root(ctx, s, P, steps);
      break;
    }
    const int R = order - E;
    f = exact::normalize(ctx, f.truncated_x(R));
    const int ax = f.ord_x_on_axis();
    if (ax < 0) {
      out.trunc_order = order;
      out.exact = own_root(ctx, s, P, steps);
      break;
    }
    FieldElem c = -ctx.div(f.coeff(ax, 0), f.coeff(0, 1));
    f = newton_step(f, Edge{0, 1, ax, 1, 1}, c);
    steps.emplace_back(ax, c);
    P[E + ax] = ctx.lift(c);
    E += ax;
  }
  for (auto& [r, c] : P)
    if (!ctx.is_zero(c)) out.terms.emplace(r, ctx.lift(c));
  return out;
}

namespace {

struct Explorer {
  FieldContext& ctx;
  const ExpandOptions& opt;
  BiPoly original;
  std::vector<Solution> out;

  bool admits(int a, int b) const {
    switch (opt.filter) {
      case LeadFilter::All:
        return true;
      case LeadFilter::AtLeastOne:
        return a >= b;
      case LeadFilter::GreaterThanOne:
        return a > b;
    }
    return true;
  }

  void emit_exact(int m, const std::map<int, FieldElem>& P, int E, int mult, int la, int lb) {
    Solution s;
    s.expansion.m = m;
    for (const auto& [r, c] : P)
      if (!ctx.is_zero(c)) s.expansion.terms.emplace(r, ctx.lift(c));
    s.expansion.trunc_order = E;
    s.expansion.exact = true;
    s.expansion.multiplicity = mult;
    s.lead_a = la;
    s.lead_b = lb;
    out.push_back(std::move(s));
  }

  void isolated(BiPoly f, int m, std::map<int, FieldElem> P, int E, int la, int lb) {
    auto st = std::make_shared<IsolatedState>();
    st->f = std::move(f);
    st->m = m;
    st->P = std::move(P);
    st->E = E;
    st->original = original;
    Solution s;
    int want = required_order(m, st->P, opt.target);
    s.expansion = continue_expansion(ctx, *st, want);
    if (!s.expansion.exact) {
      // the gcd drops may lie past the isolation point only if they are
      // still being produced; recompute the depth on the full data
      int again = required_order(m, s.expansion.terms, opt.target);
      if (again > want) s.expansion = continue_expansion(ctx, *st, again);
    }
    // at least the leading term; a root y = 0 would have been split off
    for (int d = std::max(want, 1) * 2; !s.expansion.exact && s.expansion.terms.empty(); d *= 2)
      s.expansion = continue_expansion(ctx, *st, d);
    s.state = std::move(st);
    s.lead_a = la;
    s.lead_b = lb;
    out.push_back(std::move(s));
  }

  void node(BiPoly f, int m, std::map<int, FieldElem> P, int E, bool first, int la, int lb, int parent_m0,
            int parent_b) {
    f = exact::normalize(ctx, f);
    const int yv = f.y_valuation();
    if (yv > 0) {
      emit_exact(m, P, E, yv, first ? 0 : la, first ? 0 : lb);
      f = f.shifted(0, -yv);
    }
    const int m0 = f.ord_y_on_axis();
    if (m0 <= 0) return;
    if (parent_b > 1 && m0 >= parent_m0) throw InternalError("Newton step with b > 1 did not lower the multiplicity");
    if (m0 == 1) {
      if (first) {
        la = f.ord_x_on_axis();
        lb = 1;
        if (!admits(la, lb)) return;
      }
      isolated(std::move(f), m, std::move(P), E, la, lb);
      return;
    }
    NewtonPolygon poly = newton_polygon(f);
    std::vector<Edge> edges = poly.edges;
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& u, const Edge& v) {
      return static_cast<long>(u.b) * v.a < static_cast<long>(v.b) * u.a;
    });
    for (const Edge& e : edges) {
      if (first && !admits(e.a, e.b)) continue;
      UniPoly phi = edge_polynomial(f, e);
      std::vector<FieldElem> roots = ctx.roots(phi);
      for (const FieldElem& T0 : roots) {
        FieldElem c0 = ctx.nth_root(T0, e.b);
        BiPoly f1 = newton_step(f, e, c0);
        std::map<int, FieldElem> P1;
        for (const auto& [r, c] : P) P1.emplace(r * e.b, c);
        P1[e.b * E + e.a] = c0;
        node(std::move(f1), m * e.b, std::move(P1), e.b * E + e.a, false, first ? e.a : la, first ? e.b : lb, m0,
             e.b);
      }
    }
  }

  void run(BiPoly f) {
    f = exact::normalize(ctx, f);
    if (f.is_zero()) throw InvalidInput("the zero polynomial defines no curve");
    if (!f.coeff(0, 0).is_syntactic_zero()) throw InvalidInput("the curve does not pass through the origin");
    const int xv = f.x_valuation();
    if (xv > 0) {
      if (opt.emit_vertical) {
        Solution s;
        s.expansion.vertical = true;
        s.expansion.exact = true;
        s.expansion.multiplicity = xv;
        out.push_back(std::move(s));
      }
      f = f.shifted(-xv, 0);
    }
    original = f;
    if (!f.coeff(0, 0).is_syntactic_zero()) return;
    node(std::move(f), 1, {}, 0, true, 0, 1, -1, 1);
  }
};

}  // namespace

std::vector<Solution> newton_solutions(FieldContext& ctx, const BiPoly& f, const ExpandOptions& opt) {
  Explorer ex{ctx, opt, {}, {}};
  ex.run(f);
  for (auto& s : ex.out)
    for (auto& [r, c] : s.expansion.terms) c = ctx.lift(c);
  return std::move(ex.out);
}

std::vector<PuiseuxExpansion> expand(FieldContext& ctx, const BiPoly& f, const Rational& target) {
  ExpandOptions opt;
  opt.target = target;
  std::vector<PuiseuxExpansion> r;
  for (auto& s : newton_solutions(ctx, f, opt)) r.push_back(std::move(s.expansion));
  return r;
}

}  // namespace singcurve::puiseux
