#include "singcurve/contact/equisingular.hpp"

#include <algorithm>
#include <functional>

namespace singcurve::contact {

namespace {

std::string char_list(std::vector<PuiseuxChar> cs) {
  std::vector<std::string> s;
  for (const auto& c : cs) s.push_back(c.str());
  std::sort(s.begin(), s.end());
  std::string r = "{";
  for (size_t i = 0; i < s.size(); ++i) r += (i ? ", " : "") + s[i];
  return r + "}";
}

std::vector<std::string> sorted_row(const Matrix& m, size_t i) {
  std::vector<std::string> r;
  for (size_t j = 0; j < m.size(); ++j)
    if (j != i) r.push_back(m[i][j].str());
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

CurveData curve_data(FieldContext& ctx, const puiseux::Curve& c) {
  CurveData d;
  for (const auto& b : c.branches) d.chars.push_back(invariants::characteristic(ctx, b));
  d.matrix = intersection_matrix(ctx, c.branches);
  return d;
}

EquisingularResult equisingular(const CurveData& a, const CurveData& b) {
  EquisingularResult r;
  const size_t n = a.chars.size();
  if (n != b.chars.size()) {
    r.reason = "branch counts differ: " + std::to_string(n) + " vs " + std::to_string(b.chars.size());
    return r;
  }
  if (char_list(a.chars) != char_list(b.chars)) {
    r.reason = "characteristics differ: " + char_list(a.chars) + " vs " + char_list(b.chars);
    return r;
  }
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> place = [&](size_t i) {
    if (i == n) return true;
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || !(a.chars[j] == b.chars[i])) continue;
      if (sorted_row(a.matrix, j) != sorted_row(b.matrix, i)) continue;
      bool ok = true;
      for (size_t k = 0; k < i && ok; ++k) ok = a.matrix[j][sigma[k]] == b.matrix[i][k];
      if (!ok) continue;
      sigma[i] = static_cast<int>(j);
      used[j] = true;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!place(0)) {
    r.reason = "no bijection of branches preserves characteristics and intersection numbers";
    return r;
  }
  r.equisingular = true;
  r.witness = sigma;
  return r;
}

EquisingularResult equisingular(FieldContext& ctx, const puiseux::Curve& a, const puiseux::Curve& b) {
  return equisingular(curve_data(ctx, a), curve_data(ctx, b));
}

}  // namespace singcurve::contact
