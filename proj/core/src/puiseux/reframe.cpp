#include "singcurve/errors.hpp"
#include "singcurve/puiseux/branch.hpp"

namespace singcurve::puiseux {

using exact::Series;

// s = gamma t (1 + u)^(1/n); Lagrange inversion gives
// t = sum_k tau_k s^k with tau_k = gamma^-k / k [t^(k-1)] (1 + u)^(-k/n).
PuiseuxExpansion reparametrize(FieldContext& ctx, const Series& X, const Series& Y, int order) {
  const int n = exact::series_order(ctx, X);
  if (n <= 0) throw InternalError("reparametrization needs a coordinate of positive order");
  const int N = order;
  if (static_cast<int>(X.size()) < N + n || static_cast<int>(Y.size()) < N + n)
    throw InternalError("reparametrization input is too short");
  const FieldElem c = ctx.lift(X[n]);
  const FieldElem ci = ctx.inverse(c);
  Series u(N);
  for (int k = 1; k < N && n + k < static_cast<int>(X.size()); ++k) u[k] = ctx.lift(X[n + k] * ci);
  const FieldElem gi = ctx.inverse(ctx.nth_root(c, n));

  Series tau(N + 1);
  FieldElem gk = FieldElem(1);
  for (int k = 1; k <= N; ++k) {
    gk = gk * gi;
    const Rational alpha(-k, n);
    // h = (1 + u)^alpha through degree k - 1
    Series h(k);
    h[0] = FieldElem(1);
    for (int j = 1; j < k; ++j) {
      FieldElem acc;
      for (int i = 1; i <= j; ++i) {
        if (u[i].is_syntactic_zero()) continue;
        Rational w = alpha * i - (j - i);
        if (w == 0) continue;
        acc += FieldElem(w) * u[i] * h[j - i];
      }
      h[j] = ctx.lift(acc * FieldElem(Rational(1, j)));
    }
    tau[k] = ctx.lift(gk * h[k - 1] * FieldElem(Rational(1, k)));
  }

  Series R(N + 1);
  for (int j = N; j >= 1; --j) {
    R[0] += Y[j];
    R = exact::series_mul(R, tau, N);
  }
  PuiseuxExpansion e;
  e.m = n;
  e.trunc_order = N;
  for (int r = 1; r <= N; ++r)
    if (!ctx.is_zero(R[r])) e.terms.emplace(r, R[r]);
  for (auto& [r, v] : e.terms) v = ctx.lift(v);
  return e;
}

PuiseuxExpansion reframe(FieldContext& ctx, const Branch& b0, const Frame& target, int order) {
  const Frame L = target.after(b0.frame().inverse());
  if (L.is_identity()) {
    Branch d = deepen(ctx, b0, order);
    return d.expansion.exact ? d.expansion : truncated(d.expansion, order);
  }
  if (b0.expansion.vertical) throw InternalError("vertical marker cannot be reframed");
  const PuiseuxExpansion& e0 = b0.expansion;
  const int m = e0.m;
  // ord of X = L.a t^m + L.b phi(t)
  const bool no_phi = e0.terms.empty();
  const int p = no_phi ? -1 : e0.order();
  int n = m;
  if (L.a == 0) {
    if (no_phi) throw InvalidInput("the branch is tangent to the first axis of frame " + target.str());
    n = p;
  } else if (L.b != 0 && !no_phi) {
    if (p < m) {
      n = p;
    } else if (p == m && ctx.is_zero(FieldElem(L.a) + FieldElem(L.b) * e0.terms.begin()->second)) {
      throw InvalidInput("the branch is tangent to the first axis of frame " + target.str());
    }
  }
  const int prec = order + n - 1;
  Branch b = deepen(ctx, b0, prec);
  Series phi = b.expansion.y_series(prec);
  Series X(prec + 1), Y(prec + 1);
  for (int k = 0; k <= prec; ++k) {
    FieldElem tm = k == m ? FieldElem(1) : FieldElem(0);
    X[k] = FieldElem(L.a) * tm + FieldElem(L.b) * phi[k];
    Y[k] = FieldElem(L.c) * tm + FieldElem(L.d) * phi[k];
  }
  PuiseuxExpansion r = reparametrize(ctx, X, Y, order);
  if (b.expansion.exact) {
    // X a monomial: the change of parameter is linear and nothing is lost
    int xs = 0;
    for (const auto& v : X) xs += !v.is_syntactic_zero();
    const int top = b.expansion.terms.empty() ? 0 : b.expansion.terms.rbegin()->first;
    if (xs == 1 && std::max(top, m) <= order) {
      r.exact = true;
      r.trunc_order = std::max(order, r.m);
    }
  }
  return r;
}

}  // namespace singcurve::puiseux
