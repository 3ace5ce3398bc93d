#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hyperfront/types.hpp"

namespace hyperfront::holo {

/// Immutable expression tree in the single complex variable z.
///
/// The node set is closed under differentiation and contains only
/// single-valued functions, so every expression is a holomorphic map on
/// any domain where its denominators do not vanish. Copies share nodes.
class HoloExpr {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Exp };

  /// The constant 0.
  HoloExpr();

  static HoloExpr constant(Complex c);
  static HoloExpr variable();
  static HoloExpr add(HoloExpr lhs, HoloExpr rhs);
  static HoloExpr sub(HoloExpr lhs, HoloExpr rhs);
  static HoloExpr mul(HoloExpr lhs, HoloExpr rhs);
  static HoloExpr div(HoloExpr lhs, HoloExpr rhs);
  static HoloExpr pow(HoloExpr base, int exponent);
  static HoloExpr exp(HoloExpr arg);

  [[nodiscard]] Kind kind() const noexcept;
  /// Value of a Constant node.
  [[nodiscard]] Complex constant_value() const;
  /// Exponent of a Pow node.
  [[nodiscard]] int exponent() const;
  /// First operand (Add..Div), base (Pow) or argument (Exp).
  [[nodiscard]] const HoloExpr& lhs() const;
  /// Second operand of a binary node.
  [[nodiscard]] const HoloExpr& rhs() const;

  [[nodiscard]] bool is_constant() const noexcept { return kind() == Kind::Constant; }

  /// Value at z. Throws EvalError on division by zero or a non-finite result.
  [[nodiscard]] Complex operator()(Complex z) const;

  /// Structural equality (same tree shape, same constants and exponents).
  friend bool operator==(const HoloExpr& a, const HoloExpr& b) noexcept;

 private:
  struct Node;
  explicit HoloExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Value and derivative at z by forward-mode differentiation.
[[nodiscard]] Jet eval_jet(const HoloExpr& f, Complex z);

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' int)?
///   base   := number | 'i' | 'z' | 'exp' '(' expr ')' | '(' expr ')' | '-' base
///
/// Operations whose operands are all constants are folded when the result
/// is finite, so `2 + 3*i` parses to a single constant node.
/// Throws ParseError carrying the byte offset of the offending token.
[[nodiscard]] HoloExpr parse_expr(std::string_view source);

/// Fully parenthesized text that parses back to the same tree.
[[nodiscard]] std::string to_string(const HoloExpr& f);

}  // namespace hyperfront::holo
