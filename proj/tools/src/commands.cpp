#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "parser.hpp"
#include "singcurve/contact/contact.hpp"
#include "singcurve/contact/equisingular.hpp"
#include "singcurve/contact/intersection.hpp"
#include "singcurve/invariants/characteristic.hpp"
#include "singcurve/invariants/semigroup.hpp"
#include "singcurve/knots/alexander.hpp"
#include "singcurve/knots/symbol.hpp"
#include "singcurve/puiseux/branch.hpp"
#include "singcurve/puiseux/newton.hpp"

namespace singcurve::cli {

using contact::ContactValue;
using contact::IntersectionValue;
using exact::BiPoly;
using exact::FieldContext;
using exact::Integer;
using exact::Rational;
using invariants::PuiseuxChar;
using puiseux::Branch;
using puiseux::PuiseuxExpansion;

namespace {

const char* kErratum =
    "contact exponents are the maximum over pro-branch pairs; the minimum reading does not reproduce "
    "the intersection formula (shown with --verbose)";

Json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json ints(const std::vector<invariants::Int>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json value_json(const IntersectionValue& v) {
  if (v.infinite || v.lower_bound) return v.str();
  return int_json(v.value);
}

struct Subject {
  std::string label;
  InputSpec spec;
  std::vector<Branch> branches;
  std::optional<BiPoly> poly;
  std::optional<PuiseuxChar> chr;
  std::string blabel(size_t j) const { return label + "." + std::to_string(j + 1); }
};

class Session {
 public:
  explicit Session(const Options& o) : opts(o) {}

  FieldContext ctx;
  Options opts;
  std::vector<std::string> frame_notes;
  bool erratum = false;
  int order_used = -1;

  void note_frame(const std::string& what, const puiseux::Frame& f) {
    if (f.is_identity()) return;
    std::string s = what + ": frame: " + f.str();
    if (std::find(frame_notes.begin(), frame_notes.end(), s) == frame_notes.end()) frame_notes.push_back(s);
  }
  void note_expansion(const PuiseuxExpansion& e) {
    if (!opts.order) order_used = std::max(order_used, e.trunc_order / std::max(e.m, 1));
  }

  Rational target() const { return opts.order ? Rational(*opts.order) : Rational(0); }

  Subject load(const InputSpec& spec, size_t index) {
    Subject s;
    s.label = std::to_string(index + 1);
    s.spec = spec;
    using K = InputSpec::Kind;
    switch (spec.kind) {
      case K::Implicit: {
        BiPoly f = to_bipoly(*spec.expr);
        auto curve = puiseux::branches_of(ctx, f, target(), opts.reduce);
        s.branches = std::move(curve.branches);
        s.poly = curve.defining_poly;
        break;
      }
      case K::Parametrization: {
        auto x = to_unipoly(*spec.expr), y = to_unipoly(*spec.expr2);
        Branch b = puiseux::from_parametrization(ctx, x, y);
        if (opts.order && !b.expansion.exact) b = puiseux::deepen(ctx, b, *opts.order * b.expansion.m);
        s.branches.push_back(std::move(b));
        break;
      }
      case K::Characteristic: {
        auto n = to_numbers(spec.numbers);
        s.chr = invariants::make_char(n[0], std::vector<invariants::Int>(n.begin() + 1, n.end()));
        break;
      }
      case K::Semigroup: {
        auto n = to_numbers(spec.numbers);
        s.chr = invariants::char_from_semigroup(std::vector<invariants::Int>(n.begin(), n.end()));
        break;
      }
      case K::Symbol: s.chr = knots::char_from_alexander(to_symbol(spec.symbol)); break;
      case K::Univariate: s.chr = knots::char_from_alexander(knots::symbol_of_polynomial(int_poly(spec))); break;
    }
    return s;
  }

  static exact::IntPoly int_poly(const InputSpec& spec) {
    auto p = to_unipoly(*spec.expr);
    exact::IntPoly out;
    for (const auto& c : p.coeffs()) {
      auto g = c.base_value();
      if (!g.is_real() || g.re.get_den() != 1) throw InvalidInput("Alexander polynomial needs integer coefficients");
      out.push_back(g.re.get_num());
    }
    return out;
  }

  Json branch_json(const Subject& s, size_t j) {
    const Branch& b = s.branches[j];
    note_expansion(b.expansion);
    note_frame("branch " + s.blabel(j), b.frame());
    Json o;
    o["branch"] = s.blabel(j);
    o["expansion"] = b.str();
    o["frame"] = b.frame().str();
    o["m"] = b.expansion.m;
    o["exact"] = b.expansion.exact;
    o["truncation"] = b.expansion.trunc_order;
    auto t = invariants::tangent_and_multiplicity(ctx, b);
    o["tangent"] = t.line.str();
    o["multiplicity"] = t.multiplicity;
    o["characteristic"] = invariants::characteristic(ctx, b).str();
    return o;
  }

  // (label, characteristic) for every branch, or the given characteristic.
  std::vector<std::pair<std::string, PuiseuxChar>> chars(const Subject& s) {
    if (s.chr) return {{s.label, *s.chr}};
    std::vector<std::pair<std::string, PuiseuxChar>> out;
    for (size_t j = 0; j < s.branches.size(); ++j) {
      note_expansion(s.branches[j].expansion);
      note_frame("branch " + s.blabel(j), s.branches[j].frame());
      out.emplace_back(s.blabel(j), invariants::characteristic(ctx, s.branches[j]));
    }
    return out;
  }
};

void require_branches(const Subject& s, const std::string& command) {
  if (s.chr)
    throw InvalidInput(command + " needs a polynomial or param: input, got a " + s.spec.kind_name() + " (input " +
                       s.label + ")");
}

Json char_json(const PuiseuxChar& c) {
  Json o;
  o["characteristic"] = c.str();
  o["m"] = c.m;
  o["betas"] = ints(c.betas);
  o["e"] = ints(c.es);
  o["beta_bars"] = ints(c.beta_bars);
  o["genus"] = c.genus();
  return o;
}

Json semigroup_json(const PuiseuxChar& c) {
  auto S = invariants::semigroup_of(c);
  Json o;
  o["characteristic"] = c.str();
  o["generators"] = ints(S.generators);
  o["conductor"] = S.conductor;
  o["frobenius"] = S.frobenius();
  o["delta"] = S.delta;
  o["gaps"] = ints(S.gaps());
  o["elements_below_conductor"] = ints(S.small_elements());
  return o;
}

Json alexander_json(const PuiseuxChar& c) {
  auto sym = knots::alexander_symbol(c);
  auto poly = knots::expand_symbol(sym);
  Json o;
  o["characteristic"] = c.str();
  o["symbol"] = sym.str();
  Json cyc = Json::array();
  std::string form;
  auto cf = knots::cyclotomic_form(sym);
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    if (it->second == 0) continue;
    cyc.push_back({it->first, it->second});
    if (!form.empty()) form += "*";
    form += "Phi_" + std::to_string(it->first);
    if (it->second != 1) form += "^" + std::to_string(it->second);
  }
  o["cyclotomic"] = cyc;
  o["cyclotomic_form"] = form.empty() ? "1" : form;
  o["polynomial"] = exact::int_str(poly);
  o["degree"] = static_cast<int>(poly.size()) - 1;
  return o;
}

Json cabling_json(const PuiseuxChar& c) {
  Json o;
  o["characteristic"] = c.str();
  Json pairs = Json::array();
  for (const auto& p : knots::cabling_invariants(c)) pairs.push_back({p.p, p.q});
  o["pairs"] = pairs;
  return o;
}

Json matrix_json(const contact::Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(value_json(v));
    rows.push_back(row);
  }
  return rows;
}

Json contact_list(const std::vector<ContactValue>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

struct Pooled {
  std::vector<std::string> labels;
  std::vector<const Branch*> branches;
  std::vector<size_t> owner;
};

Pooled pool(const std::vector<Subject>& subjects) {
  Pooled p;
  for (size_t k = 0; k < subjects.size(); ++k)
    for (size_t j = 0; j < subjects[k].branches.size(); ++j) {
      p.labels.push_back(subjects[k].blabel(j));
      p.branches.push_back(&subjects[k].branches[j]);
      p.owner.push_back(k);
    }
  return p;
}

using Handler = Json (*)(Session&, std::vector<Subject>&);

Json per_input(Session& s, std::vector<Subject>& subs, Json (*f)(Session&, Subject&)) {
  Json out = Json::array();
  for (auto& sub : subs) {
    Json r = f(s, sub);
    r["input"] = sub.label;
    out.push_back(r);
  }
  return out;
}

Json cmd_expand(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session& s, Subject& sub) {
    Json list = Json::array();
    if (sub.spec.kind == InputSpec::Kind::Implicit) {
      for (const auto& e : puiseux::expand(s.ctx, to_bipoly(*sub.spec.expr), s.target())) {
        s.note_expansion(e);
        Json o;
        o["expansion"] = e.str();
        o["m"] = e.m;
        o["exact"] = e.exact;
        o["truncation"] = e.trunc_order;
        o["multiplicity"] = e.multiplicity;
        o["vertical"] = e.vertical;
        list.push_back(o);
      }
    } else {
      require_branches(sub, "expand");
      for (size_t j = 0; j < sub.branches.size(); ++j) list.push_back(s.branch_json(sub, j));
    }
    return Json{{"expansions", list}};
  });
}

Json cmd_branches(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session& s, Subject& sub) {
    require_branches(sub, "branches");
    Json list = Json::array();
    for (size_t j = 0; j < sub.branches.size(); ++j) list.push_back(s.branch_json(sub, j));
    Json o{{"branches", list}, {"count", sub.branches.size()}};
    if (sub.branches.size() > 1) {
      std::vector<Branch> bs(sub.branches.begin(), sub.branches.end());
      o["intersection_matrix"] = matrix_json(contact::intersection_matrix(s.ctx, bs));
    }
    return o;
  });
}

template <Json (*F)(const PuiseuxChar&)>
Json by_char(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session& s, Subject& sub) {
    Json list = Json::array();
    for (const auto& [label, c] : s.chars(sub)) {
      Json o = F(c);
      o["branch"] = label;
      list.push_back(o);
    }
    return Json{{"branches", list}};
  });
}

Json cmd_implicitize(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session& s, Subject& sub) {
    require_branches(sub, "implicitize");
    Json list = Json::array();
    for (size_t j = 0; j < sub.branches.size(); ++j) {
      s.note_expansion(sub.branches[j].expansion);
      auto imp = puiseux::implicitize(s.ctx, sub.branches[j]);
      list.push_back({{"branch", sub.blabel(j)}, {"polynomial", imp.poly.str()}, {"truncated", imp.truncated}});
    }
    return Json{{"branches", list}};
  });
}

Json cmd_alexander(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session& s, Subject& sub) {
    Json list = Json::array();
    for (const auto& [label, c] : s.chars(sub)) {
      Json o = alexander_json(c);
      o["branch"] = label;
      list.push_back(o);
    }
    Json o{{"branches", list}};
    if (sub.branches.size() > 1) {
      puiseux::Curve curve{sub.branches, sub.poly};
      o["linking_matrix"] = matrix_json(knots::linking_matrix(s.ctx, curve));
    }
    return o;
  });
}

Json cmd_recover(Session& s, std::vector<Subject>& subs) {
  return per_input(s, subs, [](Session&, Subject& sub) {
    if (!sub.chr) throw InvalidInput("recover needs a symbol:, semigroup: or a polynomial in t (input " + sub.label + ")");
    Json o = char_json(*sub.chr);
    o["symbol"] = knots::alexander_symbol(*sub.chr).str();
    o["semigroup_generators"] = ints(sub.chr->beta_bars);
    return o;
  });
}

Json cmd_intersect(Session& s, std::vector<Subject>& subs) {
  for (auto& sub : subs) require_branches(sub, "intersect");
  Pooled p = pool(subs);
  const size_t n = p.branches.size();
  contact::Matrix m(n, std::vector<IntersectionValue>(n));
  Json paths = Json::array();
  for (size_t i = 0; i < n; ++i) {
    m[i][i].infinite = true;
    for (size_t j = i + 1; j < n; ++j) {
      auto t = contact::intersection_detail(s.ctx, *p.branches[i], *p.branches[j]);
      m[i][j] = m[j][i] = t.value;
      s.note_expansion(t.contact.e1);
      s.note_expansion(t.contact.e2);
      s.note_frame("pair " + p.labels[i] + " " + p.labels[j], t.contact.frame);
      if (s.opts.verbose) {
        s.erratum = true;
        Json o{{"pair", {p.labels[i], p.labels[j]}}, {"value", value_json(t.value)}, {"contact", t.contact.kappa.str()}};
        if (!t.value.infinite && !t.value.lower_bound) {
          o["substitution"] = t.substitution.get_str();
          o["corollary"] = t.corollary.get_str();
          o["compact"] = t.compact.get_str();
          o["pro_sum"] = t.pro_sum.get_str();
        }
        paths.push_back(o);
      }
    }
  }
  Json o{{"branches", p.labels}, {"matrix", matrix_json(m)}};
  if (subs.size() == 2) {
    IntersectionValue total;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (p.owner[i] != 0 || p.owner[j] != 1) continue;
        total.infinite = total.infinite || m[i][j].infinite;
        total.lower_bound = total.lower_bound || m[i][j].lower_bound;
        total.value += m[i][j].value;
      }
    o["total"] = value_json(total);
  }
  if (s.opts.verbose) o["paths"] = paths;
  return Json::array({o});
}

Json cmd_contact(Session& s, std::vector<Subject>& subs) {
  for (auto& sub : subs) require_branches(sub, "contact");
  s.erratum = true;
  Pooled p = pool(subs);
  Json out = Json::array();
  if (p.branches.size() == 1) {
    const Branch& b = *p.branches[0];
    auto c = invariants::characteristic(s.ctx, b);
    auto e = puiseux::deepen(s.ctx, b, std::max(c.betas.empty() ? 0 : static_cast<int>(c.betas.back()), b.expansion.trunc_order)).expansion;
    s.note_expansion(e);
    out.push_back({{"branch", p.labels[0]}, {"self_multiset", contact_list(contact::self_multiset(s.ctx, e))}});
    return out;
  }
  for (size_t i = 0; i < p.branches.size(); ++i)
    for (size_t j = i + 1; j < p.branches.size(); ++j) {
      auto r = contact::contact(s.ctx, *p.branches[i], *p.branches[j]);
      s.note_frame("pair " + p.labels[i] + " " + p.labels[j], r.frame);
      s.note_expansion(r.e1);
      s.note_expansion(r.e2);
      Json o{{"pair", {p.labels[i], p.labels[j]}}, {"contact", r.kappa.str()}, {"multiset", contact_list(r.multiset)},
             {"frame", r.frame.str()}};
      if (s.opts.verbose) o["minimum"] = r.minimum.str();
      out.push_back(o);
    }
  return out;
}

Json cmd_equisingular(Session& s, std::vector<Subject>& subs) {
  if (subs.size() != 2) throw UsageError("equisingular takes exactly two inputs");
  std::vector<puiseux::Curve> curves;
  for (auto& sub : subs) {
    require_branches(sub, "equisingular");
    curves.push_back({sub.branches, sub.poly});
  }
  auto a = contact::curve_data(s.ctx, curves[0]), b = contact::curve_data(s.ctx, curves[1]);
  auto r = contact::equisingular(a, b);
  Json o;
  o["equisingular"] = r.equisingular;
  o["reason"] = r.reason;
  Json w = Json::array();
  for (size_t i = 0; i < r.witness.size(); ++i) w.push_back({subs[1].blabel(i), subs[0].blabel(r.witness[i])});
  o["witness"] = w;
  for (int k = 0; k < 2; ++k) {
    const auto& d = k == 0 ? a : b;
    Json cs = Json::array();
    for (const auto& c : d.chars) cs.push_back(c.str());
    o[k == 0 ? "first" : "second"] = {{"characteristics", cs}, {"matrix", matrix_json(d.matrix)}};
  }
  for (auto& sub : subs)
    for (size_t j = 0; j < sub.branches.size(); ++j) {
      s.note_expansion(sub.branches[j].expansion);
      s.note_frame("branch " + sub.blabel(j), sub.branches[j].frame());
    }
  return Json::array({o});
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"expand", cmd_expand},
      {"branches", cmd_branches},
      {"char", by_char<char_json>},
      {"semigroup", by_char<semigroup_json>},
      {"implicitize", cmd_implicitize},
      {"intersect", cmd_intersect},
      {"contact", cmd_contact},
      {"equisingular", cmd_equisingular},
      {"cabling", by_char<cabling_json>},
      {"alexander", cmd_alexander},
      {"recover", cmd_recover},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"expand", "branches", "char", "semigroup", "implicitize", "intersect",
                                                 "contact", "equisingular", "cabling", "alexander", "recover"};
  return names;
}

Json run(const std::string& command, const std::vector<std::string>& inputs, const Options& opts) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UsageError("unknown command '" + command + "'");
  if (inputs.empty()) throw UsageError(command + " needs at least one input");
  if (opts.order && *opts.order < 1) throw UsageError("--order must be positive");

  std::vector<InputSpec> specs;
  for (size_t k = 0; k < inputs.size(); ++k) {
    try {
      specs.push_back(parse_input(inputs[k]));
    } catch (ParseError& e) {
      e.input = static_cast<int>(k);
      throw;
    }
  }
  Session s(opts);
  std::vector<Subject> subs;
  for (size_t k = 0; k < specs.size(); ++k) subs.push_back(s.load(specs[k], k));
  Json results = it->second(s, subs);

  Json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["inputs"] = inputs;
  r["results"] = results;
  r["frame_notes"] = s.frame_notes;
  r["erratum_notes"] = s.erratum ? Json::array({kErratum}) : Json::array();
  if (opts.order)
    r["order_used"] = *opts.order;
  else if (s.order_used >= 0)
    r["order_used"] = s.order_used;
  else
    r["order_used"] = nullptr;
  return r;
}

int exit_code_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UsageError*>(&e)) return 2;
  if (dynamic_cast<const InvalidInput*>(&e)) return 3;
  if (dynamic_cast<const InternalError*>(&e)) return 4;
  return 1;
}

std::string describe_error(const std::exception& e, const std::vector<std::string>& inputs) {
  std::ostringstream os;
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    os << "parse error in input " << p->input + 1 << " at column " << p->position + 1 << ": " << p->what();
    if (p->input >= 0 && static_cast<size_t>(p->input) < inputs.size()) {
      os << "\n  " << inputs[p->input] << "\n  " << std::string(p->position, ' ') << "^";
    }
    return os.str();
  }
  if (dynamic_cast<const UsageError*>(&e)) return std::string("usage error: ") + e.what();
  if (dynamic_cast<const TruncationError*>(&e))
    return std::string("truncation error: ") + e.what() + "\n  hint: raise --order";
  if (dynamic_cast<const InvalidInput*>(&e)) return std::string("invalid input: ") + e.what();
  if (dynamic_cast<const InternalError*>(&e)) return std::string("internal consistency failure: ") + e.what();
  return std::string("error: ") + e.what();
}

Json run_batch(const std::string& command, const std::vector<std::vector<std::string>>& groups, const Options& opts,
               unsigned threads, int& status) {
  std::vector<Json> out(groups.size());
  std::vector<int> codes(groups.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < groups.size();) {
      try {
        out[k] = run(command, groups[k], opts);
      } catch (const std::exception& e) {
        codes[k] = exit_code_of(e);
        out[k] = Json{{"error", describe_error(e, groups[k])}, {"status", codes[k]}, {"inputs", groups[k]}};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(groups.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  Json inputs = Json::array(), results = Json::array(), frames = Json::array(), errata = Json::array();
  Json order = nullptr;
  status = 0;
  for (size_t k = 0; k < groups.size(); ++k) {
    inputs.push_back(groups[k]);
    status = std::max(status, codes[k]);
    if (codes[k]) {
      results.push_back(out[k]);
      continue;
    }
    results.push_back(out[k]["results"]);
    for (const auto& f : out[k]["frame_notes"]) frames.push_back("line " + std::to_string(k + 1) + ": " + f.get<std::string>());
    for (const auto& e : out[k]["erratum_notes"])
      if (std::find(errata.begin(), errata.end(), e) == errata.end()) errata.push_back(e);
    const auto& o = out[k]["order_used"];
    if (!o.is_null() && (order.is_null() || o.get<int>() > order.get<int>())) order = o;
  }
  r["inputs"] = inputs;
  r["results"] = results;
  r["frame_notes"] = frames;
  r["erratum_notes"] = errata;
  r["order_used"] = order;
  return r;
}

}  // namespace singcurve::cli
