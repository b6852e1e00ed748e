#include "singcurve/contact/contact.hpp"

#include <algorithm>

#include "singcurve/errors.hpp"

namespace singcurve::contact {

namespace {

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

constexpr int kOrderCap = 320;

bool deepenable(const Branch& b) { return b.expansion.exact || b.source != nullptr; }

int start_order(const Branch& b) { return std::max(b.expansion.trunc_order, 2 * b.expansion.m + 8); }

}  // namespace

std::string ContactValue::str() const {
  if (infinite) return "inf";
  return (lower_bound ? ">= " : "") + value.get_str();
}

bool operator<(const ContactValue& a, const ContactValue& b) {
  if (a.infinite || b.infinite) return !a.infinite && b.infinite;
  if (a.value != b.value) return a.value < b.value;
  return !a.lower_bound && b.lower_bound;
}

ProBranch pro_branch(FieldContext& ctx, const PuiseuxExpansion& e, int twist) {
  if (e.vertical) throw InvalidInput("the line x = 0 has no pro-branches in its own frame");
  ProBranch p;
  p.m = e.m;
  p.twist = twist;
  p.exact = e.exact;
  p.known = frac(e.trunc_order, e.m);
  FieldElem z = e.m > 1 && twist % e.m != 0 ? ctx.root_of_unity(e.m).pow(twist) : FieldElem(1);
  for (const auto& [r, c] : e.terms) p.terms.emplace(frac(r, e.m), ctx.lift(z.pow(r) * c));
  return p;
}

ContactValue pro_contact(FieldContext& ctx, const ProBranch& g, const ProBranch& h) {
  const bool both = g.exact && h.exact;
  Rational limit = g.exact ? h.known : (h.exact ? g.known : std::min(g.known, h.known));
  std::vector<Rational> keys;
  for (const auto& [s, c] : g.terms) keys.push_back(s);
  for (const auto& [s, c] : h.terms) keys.push_back(s);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Rational& s : keys) {
    if (!both && s > limit) break;
    auto a = g.terms.find(s), b = h.terms.find(s);
    FieldElem d = (a == g.terms.end() ? FieldElem(0) : a->second) - (b == h.terms.end() ? FieldElem(0) : b->second);
    if (!ctx.is_zero(d)) return {false, s, false};
  }
  if (both) return ContactValue::inf();
  return {false, limit, true};
}

std::vector<ContactValue> contact_multiset(FieldContext& ctx, const PuiseuxExpansion& e, const ProBranch& g) {
  std::vector<ContactValue> r;
  for (int k = 0; k < e.m; ++k) r.push_back(pro_contact(ctx, pro_branch(ctx, e, k), g));
  return r;
}

std::vector<ContactValue> self_multiset(FieldContext& ctx, const PuiseuxExpansion& e) {
  ProBranch g = pro_branch(ctx, e, 0);
  std::vector<ContactValue> r;
  for (int k = 1; k < e.m; ++k) r.push_back(pro_contact(ctx, pro_branch(ctx, e, k), g));
  return r;
}

Frame common_frame(FieldContext& ctx, const std::vector<const Branch*>& bs) {
  std::vector<Frame> cands{Frame::identity(), Frame::swap()};
  for (int k = 1; k <= 12; ++k) {
    cands.push_back(Frame::shear(k));
    cands.push_back(Frame::shear(-k));
  }
  for (const Frame& f : cands) {
    bool ok = true;
    for (const Branch* b : bs) {
      auto [dx, dy] = puiseux::tangent_direction(*b);
      if (ctx.is_zero(FieldElem(f.a) * dx + FieldElem(f.b) * dy)) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  throw InternalError("no frame is transverse to every branch");
}

bool same_branch(FieldContext& ctx, const Branch& a, const Branch& b) {
  if (a.source && a.source == b.source) return true;
  if (a.param && b.param && a.param->x == b.param->x && a.param->y == b.param->y) return true;
  if (a.swapped == b.swapped && a.expansion.exact && b.expansion.exact)
    return puiseux::conjugacy_twist(ctx, a.expansion, b.expansion).has_value();
  return false;
}

ContactResult contact(FieldContext& ctx, const Branch& b1, const Branch& b2) {
  ContactResult r;
  r.frame = common_frame(ctx, {&b1, &b2});
  const bool same = same_branch(ctx, b1, b2);
  int o1 = start_order(b1), o2 = same ? o1 : start_order(b2);
  for (;;) {
    r.e1 = puiseux::reframe(ctx, b1, r.frame, o1);
    try {
      r.c1 = invariants::characteristic(r.e1);
    } catch (const TruncationError&) {
      if (!deepenable(b1) || o1 > kOrderCap) throw;
      o1 *= 2;
      continue;
    }
    if (same) {
      r.e2 = r.e1;
      r.c2 = r.c1;
      r.multiset = contact_multiset(ctx, r.e1, pro_branch(ctx, r.e1, 0));
      r.multiset[0] = ContactValue::inf();
      r.kappa = ContactValue::inf();
      r.minimum = *std::min_element(r.multiset.begin(), r.multiset.end());
      return r;
    }
    r.e2 = puiseux::reframe(ctx, b2, r.frame, o2);
    try {
      r.c2 = invariants::characteristic(r.e2);
    } catch (const TruncationError&) {
      if (!deepenable(b2) || o2 > kOrderCap) throw;
      o2 *= 2;
      continue;
    }
    r.multiset = contact_multiset(ctx, r.e1, pro_branch(ctx, r.e2, 0));
    r.kappa = *std::max_element(r.multiset.begin(), r.multiset.end());
    r.minimum = *std::min_element(r.multiset.begin(), r.multiset.end());
    if (r.kappa.lower_bound && deepenable(b1) && deepenable(b2) && std::max(o1, o2) <= kOrderCap) {
      o1 *= 2;
      o2 *= 2;
      continue;
    }
    return r;
  }
}

}  // namespace singcurve::contact
