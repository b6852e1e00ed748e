#include "singcurve/puiseux/branch.hpp"

namespace singcurve::puiseux {

namespace {

using Matrix = std::vector<std::vector<UniPoly>>;

Matrix mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix r(n, std::vector<UniPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

BiPoly implicitize(const PuiseuxExpansion& e) {
  if (e.vertical) return BiPoly::x();
  const int m = e.m;
  std::vector<std::vector<FieldElem>> phi(m);
  for (const auto& [r, c] : e.terms) {
    auto& v = phi[r % m];
    if (static_cast<int>(v.size()) <= r / m) v.resize(r / m + 1);
    v[r / m] = c;
  }
  const UniPoly x = UniPoly({0, 1});
  Matrix A(m, std::vector<UniPoly>(m));
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) {
      UniPoly p(phi[(a - j + m) % m]);
      A[a][j] = a >= j ? p : x * p;
    }

  // Faddeev-LeVerrier: M_1 = I, c_{m-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{m-k} I
  std::vector<UniPoly> c(m + 1);
  c[m] = UniPoly({1});
  Matrix M(m, std::vector<UniPoly>(m));
  for (int i = 0; i < m; ++i) M[i][i] = UniPoly({1});
  for (int k = 1; k <= m; ++k) {
    Matrix AM = mul(A, M);
    UniPoly tr;
    for (int i = 0; i < m; ++i) tr += AM[i][i];
    c[m - k] = tr.scaled(FieldElem(Rational(-1, k)));
    for (int i = 0; i < m; ++i) AM[i][i] += c[m - k];
    M = std::move(AM);
  }
  BiPoly D;
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= c[j].degree(); ++i)
      if (!c[j][i].is_syntactic_zero()) D.add_term(i, j, c[j][i]);
  return D;
}

}  // namespace singcurve::puiseux
