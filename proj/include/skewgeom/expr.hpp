#ifndef SKEWGEOM_EXPR_HPP
#define SKEWGEOM_EXPR_HPP

#include "skewgeom/jet.hpp"
#include "skewgeom/tensor4.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace skewgeom {

// Scalar functions of (x1, x2, x3, x4):
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := ("-")? power
//   power  := atom ("^" integer)?
//   atom   := number | "x1".."x4" | func "(" expr ")" | "(" expr ")"
//   func   := "exp" | "log" | "sin" | "cos" | "sqrt"
//
// `integer` may carry a leading "-". Whitespace is insignificant.

enum class ExprKind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos, Sqrt };

/// Immutable expression tree. Copies share nodes.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(double c);
  /// Coordinate x^index with index in 1..4.
  static Expr variable(int index);
  static Expr unary(ExprKind kind, Expr arg);
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);

  ExprKind kind() const;
  double constant_value() const;
  int variable_index() const;  // 1-based
  int exponent() const;
  const std::vector<Expr>& children() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Parse under the grammar above; throws ParseError.
Expr parse(std::string_view source);

/// Canonical, fully parenthesized text. parse(to_string(e)) == e for every
/// tree whose constants are finite and non-negative, which includes every
/// parsed tree.
std::string to_string(const Expr& e);

/// Exact value, gradient and Hessian at `p`. Throws DomainError.
Jet2 eval_jet2(const Expr& e, const ChartPoint& p);

/// Plain value at `p`. Throws DomainError.
double eval(const Expr& e, const ChartPoint& p);

}  // namespace skewgeom

#endif  // SKEWGEOM_EXPR_HPP
