#pragma once

#include <memory>
#include <string>
#include <vector>

#include "singcurve/errors.hpp"
#include "singcurve/exact/poly.hpp"
#include "singcurve/knots/symbol.hpp"

namespace singcurve::cli {

struct ParseError : Error {
  ParseError(const std::string& msg, size_t pos) : Error(msg), position(pos) {}
  size_t position;
  int input = 0;  // index among the command's inputs
};

struct Expr {
  enum class Kind { Number, Imag, Var, Add, Sub, Mul, Juxt, Div, Pow, Neg, Pos, Paren };
  Kind kind;
  std::string text;  // digits or variable name
  int exponent = 0;
  std::string exponent_text;
  std::shared_ptr<const Expr> a, b;
  size_t pos = 0;
};
using ExprPtr = std::shared_ptr<const Expr>;

std::string print(const Expr& e);

struct SymbolItem {
  char sign = 0;  // '+', '-' or none
  std::string coeff;  // empty when absent
  std::string index;
};

struct InputSpec {
  enum class Kind { Implicit, Parametrization, Characteristic, Semigroup, Symbol, Univariate };
  Kind kind = Kind::Implicit;
  std::string source;
  ExprPtr expr, expr2;
  std::vector<std::string> numbers;  // char: m then betas; semigroup: generators
  std::vector<SymbolItem> symbol;

  std::string print() const;
  std::string kind_name() const;
};

// Grammar:
//   input     := poly | "param:" poly "," poly | "char:" "(" int (";" int ("," int)*)? ")"
//              | "semigroup:" int ("," int)* | "symbol:" item (("+"|"-") item)*
//   poly      := ["+"|"-"] term (("+"|"-") term)*
//   term      := power (("*" | "/" | <juxtaposition>) power)*
//   power     := atom ["^" int]
//   atom      := int | "i" | x | y | t | "(" poly ")"
// A polynomial in t alone is Univariate; otherwise its variables must be x, y.
InputSpec parse_input(const std::string& text);

// Evaluation; throws InvalidInput for a non-constant divisor.
exact::BiPoly to_bipoly(const Expr& e);
// Polynomial in t.
exact::UniPoly to_unipoly(const Expr& e);
knots::Symbol to_symbol(const std::vector<SymbolItem>& items);
std::vector<long> to_numbers(const std::vector<std::string>& ns);

}  // namespace singcurve::cli
