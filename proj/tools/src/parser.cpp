#include "parser.hpp"

#include <cctype>
#include <algorithm>
#include <set>

namespace singcurve::cli {

using exact::BiPoly;
using exact::FieldElem;
using exact::GaussRational;
using exact::Integer;
using exact::Rational;
using exact::UniPoly;

namespace {

ExprPtr node(Expr::Kind k, size_t pos, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

class Parser {
 public:
  Parser(const std::string& s, size_t base) : s_(s), base_(base) {}

  ExprPtr poly() {
    skip();
    ExprPtr left;
    size_t p = pos_;
    if (peek() == '-' || peek() == '+') {
      char c = s_[pos_++];
      left = node(c == '-' ? Expr::Kind::Neg : Expr::Kind::Pos, at(p), term());
    } else {
      left = term();
    }
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return left;
      p = pos_++;
      left = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, at(p), left, term());
    }
  }

  void expect_end() {
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }
  size_t pos() const { return pos_; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, at(pos_)); }

 private:
  size_t at(size_t p) const { return base_ + p; }

  bool starts_atom() {
    skip();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  ExprPtr term() {
    ExprPtr left = power();
    for (;;) {
      skip();
      char c = peek();
      size_t p = pos_;
      if (c == '*' || c == '/') {
        ++pos_;
        left = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, at(p), left, power());
      } else if (starts_atom()) {
        left = node(Expr::Kind::Juxt, at(p), left, power());
      } else {
        return left;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip();
    if (peek() != '^') return base;
    size_t p = pos_++;
    skip();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    std::string digits = number();
    if (digits.size() > 6) fail("exponent too large");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->pos = at(p);
    e->a = base;
    e->exponent = std::stoi(digits);
    e->exponent_text = digits;
    return e;
  }

  std::string number() {
    size_t st = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      throw ParseError("unsupported coefficient: decimal numbers are not accepted", at(st));
    return s_.substr(st, pos_ - st);
  }

  ExprPtr atom() {
    skip();
    size_t p = pos_;
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '.') throw ParseError("unsupported coefficient: decimal numbers are not accepted", at(p));
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = at(p);
      e->text = number();
      return e;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = poly();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return node(Expr::Kind::Paren, at(p), inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->pos = at(p);
      e->text = std::string(1, c);
      if (c == 'i') {
        e->kind = Expr::Kind::Imag;
      } else if (c == 'x' || c == 'y' || c == 't') {
        e->kind = Expr::Kind::Var;
      } else {
        pos_ = p;
        fail("unknown symbol '" + std::string(1, c) + "'");
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t base_;
  size_t pos_ = 0;
};

void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Var) out.insert(e.text);
  if (e.a) collect_vars(*e.a, out);
  if (e.b) collect_vars(*e.b, out);
}

// Position of the first variable accepted by `bad`, or npos.
template <class Pred>
size_t first_var(const Expr& e, Pred bad) {
  size_t best = std::string::npos;
  if (e.kind == Expr::Kind::Var && bad(e.text)) best = e.pos;
  for (const auto& c : {e.a, e.b})
    if (c) best = std::min(best, first_var(*c, bad));
  return best;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits a comma list of unsigned integers starting at offset `base`.
std::vector<std::string> int_list(const std::string& s, size_t base, char sep) {
  std::vector<std::string> out;
  size_t i = 0;
  for (;;) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == st) throw ParseError("expected a positive integer", base + i);
    if (i < s.size() && s[i] == '.')
      throw ParseError("unsupported coefficient: decimal numbers are not accepted", base + st);
    out.push_back(s.substr(st, i - st));
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) return out;
    if (s[i] != sep) throw ParseError("expected '" + std::string(1, sep) + "'", base + i);
    ++i;
  }
}

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

size_t body_start(const std::string& s, size_t after) {
  while (after < s.size() && std::isspace(static_cast<unsigned char>(s[after]))) ++after;
  return after;
}

}  // namespace

std::string print(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
    case K::Imag:
    case K::Var: return e.text;
    case K::Add: return print(*e.a) + "+" + print(*e.b);
    case K::Sub: return print(*e.a) + "-" + print(*e.b);
    case K::Mul: return print(*e.a) + "*" + print(*e.b);
    case K::Juxt: return print(*e.a) + print(*e.b);
    case K::Div: return print(*e.a) + "/" + print(*e.b);
    case K::Pow: return print(*e.a) + "^" + e.exponent_text;
    case K::Neg: return "-" + print(*e.a);
    case K::Pos: return "+" + print(*e.a);
    case K::Paren: return "(" + print(*e.a) + ")";
  }
  return {};
}

std::string InputSpec::print() const {
  switch (kind) {
    case Kind::Implicit:
    case Kind::Univariate: return cli::print(*expr);
    case Kind::Parametrization: return "param:" + cli::print(*expr) + "," + cli::print(*expr2);
    case Kind::Characteristic: {
      std::string s = "char:(" + numbers[0];
      for (size_t k = 1; k < numbers.size(); ++k) s += (k == 1 ? ";" : ",") + numbers[k];
      return s + ")";
    }
    case Kind::Semigroup: {
      std::string s = "semigroup:";
      for (size_t k = 0; k < numbers.size(); ++k) s += (k ? "," : "") + numbers[k];
      return s;
    }
    case Kind::Symbol: {
      std::string s = "symbol:";
      for (const auto& it : symbol) {
        if (it.sign) s += it.sign;
        if (!it.coeff.empty()) s += it.coeff + "*";
        s += "S(" + it.index + ")";
      }
      return s;
    }
  }
  return {};
}

std::string InputSpec::kind_name() const {
  switch (kind) {
    case Kind::Implicit: return "implicit";
    case Kind::Parametrization: return "parametrization";
    case Kind::Characteristic: return "characteristic";
    case Kind::Semigroup: return "semigroup";
    case Kind::Symbol: return "symbol";
    case Kind::Univariate: return "polynomial in t";
  }
  return {};
}

InputSpec parse_input(const std::string& text) {
  InputSpec in;
  in.source = text;
  size_t lead = body_start(text, 0);
  std::string s = text.substr(lead);

  if (has_prefix(s, "param:")) {
    in.kind = InputSpec::Kind::Parametrization;
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("param: expects two coordinates separated by ','", lead + s.size());
    std::string first = s.substr(6, comma - 6), second = s.substr(comma + 1);
    Parser p1(first, lead + 6), p2(second, lead + comma + 1);
    in.expr = p1.poly();
    p1.expect_end();
    in.expr2 = p2.poly();
    p2.expect_end();
    for (const auto& e : {in.expr, in.expr2}) {
      size_t bad = first_var(*e, [](const std::string& v) { return v != "t"; });
      if (bad != std::string::npos) throw ParseError("param: coordinates must be polynomials in t", bad);
    }
    return in;
  }
  if (has_prefix(s, "char:")) {
    in.kind = InputSpec::Kind::Characteristic;
    size_t b = body_start(s, 5);
    if (b >= s.size() || s[b] != '(') throw ParseError("char: expects (m;b1,...,bg)", lead + b);
    size_t close = s.find(')', b);
    if (close == std::string::npos) throw ParseError("expected ')'", lead + s.size());
    if (!trim(s.substr(close + 1)).empty()) throw ParseError("unexpected text after ')'", lead + close + 1);
    std::string inner = s.substr(b + 1, close - b - 1);
    size_t semi = inner.find(';');
    std::string mpart = inner.substr(0, semi);
    in.numbers = int_list(mpart, lead + b + 1, ',');
    if (in.numbers.size() != 1) throw ParseError("expected ';' after the multiplicity", lead + b + 1);
    if (semi != std::string::npos) {
      auto rest = int_list(inner.substr(semi + 1), lead + b + 2 + semi, ',');
      in.numbers.insert(in.numbers.end(), rest.begin(), rest.end());
    }
    return in;
  }
  if (has_prefix(s, "semigroup:")) {
    in.kind = InputSpec::Kind::Semigroup;
    in.numbers = int_list(s.substr(10), lead + 10, ',');
    return in;
  }
  if (has_prefix(s, "symbol:")) {
    in.kind = InputSpec::Kind::Symbol;
    size_t i = 7;
    auto ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    ws();
    if (i == s.size()) throw ParseError("empty symbol", lead + i);
    bool first = true;
    while (i < s.size()) {
      SymbolItem it;
      if (s[i] == '+' || s[i] == '-') {
        it.sign = s[i++];
        ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", lead + i);
      }
      first = false;
      size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > st) {
        it.coeff = s.substr(st, i - st);
        ws();
        if (i >= s.size() || s[i] != '*') throw ParseError("expected '*' after the coefficient", lead + i);
        ++i;
        ws();
      }
      if (i + 1 >= s.size() || s[i] != 'S' || s[i + 1] != '(') throw ParseError("expected S(n)", lead + i);
      i += 2;
      ws();
      st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == st) throw ParseError("expected a positive integer", lead + i);
      it.index = s.substr(st, i - st);
      ws();
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", lead + i);
      ++i;
      ws();
      in.symbol.push_back(it);
    }
    return in;
  }

  Parser p(s, lead);
  in.expr = p.poly();
  p.expect_end();
  std::set<std::string> vars;
  collect_vars(*in.expr, vars);
  if (vars.count("t")) {
    if (vars.size() > 1)
      throw ParseError("cannot mix t with x, y", first_var(*in.expr, [](const std::string& v) { return v == "t"; }));
    in.kind = InputSpec::Kind::Univariate;
  } else {
    in.kind = InputSpec::Kind::Implicit;
  }
  return in;
}

namespace {

// x and t share the first slot.
BiPoly eval(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return BiPoly::constant(FieldElem(Rational(Integer(e.text))));
    case K::Imag: return BiPoly::constant(FieldElem::i());
    case K::Var: return e.text == "y" ? BiPoly::y() : BiPoly::x();
    case K::Add: return eval(*e.a) + eval(*e.b);
    case K::Sub: return eval(*e.a) - eval(*e.b);
    case K::Mul:
    case K::Juxt: return eval(*e.a) * eval(*e.b);
    case K::Div: {
      BiPoly d = eval(*e.b);
      if (d.is_zero()) throw InvalidInput("division by zero");
      if (d.deg_x() != 0 || d.deg_y() != 0) throw InvalidInput("only division by a constant is supported");
      BiPoly n = eval(*e.a);
      n *= FieldElem(d.coeff(0, 0).base_value().inverse());
      return n;
    }
    case K::Pow: return eval(*e.a).pow(static_cast<unsigned>(e.exponent));
    case K::Neg: return -eval(*e.a);
    case K::Pos:
    case K::Paren: return eval(*e.a);
  }
  return {};
}

}  // namespace

BiPoly to_bipoly(const Expr& e) { return eval(e); }

UniPoly to_unipoly(const Expr& e) {
  BiPoly b = eval(e);
  std::vector<FieldElem> c(b.is_zero() ? 0 : b.deg_x() + 1, FieldElem(0L));
  for (int k = 0; k < static_cast<int>(c.size()); ++k) c[k] = b.coeff(k, 0);
  return UniPoly(c);
}

knots::Symbol to_symbol(const std::vector<SymbolItem>& items) {
  knots::Symbol s;
  for (const auto& it : items) {
    if (it.index.size() > 9 || (!it.coeff.empty() && it.coeff.size() > 9)) throw InvalidInput("symbol entry too large");
    knots::Int n = std::stoll(it.index), a = it.coeff.empty() ? 1 : std::stoll(it.coeff);
    if (n < 1) throw InvalidInput("S(n) needs n >= 1");
    s.add(n, it.sign == '-' ? -a : a);
  }
  return s;
}

std::vector<long> to_numbers(const std::vector<std::string>& ns) {
  std::vector<long> out;
  for (const auto& n : ns) {
    if (n.size() > 12) throw InvalidInput("integer too large: " + n);
    out.push_back(std::stol(n));
  }
  return out;
}

}  // namespace singcurve::cli
