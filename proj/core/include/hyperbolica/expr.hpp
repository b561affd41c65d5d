#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbolica/errors.hpp"

namespace hyperbolica {

enum class Var { x, y };

inline const char* var_name(Var v) { return v == Var::x ? "x" : "y"; }

// Values bound to the expression variables during evaluation.  Component
// functions of a natural hyperbolic function bind exactly one of them.
struct Bindings {
  std::optional<double> x;
  std::optional<double> y;

  static Bindings only_x(double v) { return {v, std::nullopt}; }
  static Bindings only_y(double v) { return {std::nullopt, v}; }
  static Bindings xy(double xv, double yv) { return {xv, yv}; }
};

// How a Heaviside factor evaluates exactly at its jump: `right` is the
// function value H(0) = 1, `left` produces the one-sided limit from below.
// Left-limit evaluation is what makes jump magnitudes computable without
// numeric limits.
enum class JumpSide { right, left };

// Immutable expression tree for a real-valued function of x and/or y.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')' | '-' atom
//   ident  := 'x' | 'y' | 'sin' | 'cos' | 'exp' | 'abs' | 'H'
//
// Note that '-' binds at the atom level, so "-x^2" parses as "(-x)^2"; the
// renderer parenthesizes accordingly and render/parse round-trips are exact.
class RealExpr {
 public:
  enum class Kind {
    constant,
    variable,
    add,
    sub,
    mul,
    div,
    pow,
    neg,
    sin,
    cos,
    exp,
    abs,
    heaviside
  };

  static RealExpr parse(std::string_view src);

  static RealExpr constant(double value);
  static RealExpr variable(Var v);
  static RealExpr add(RealExpr lhs, RealExpr rhs);
  static RealExpr sub(RealExpr lhs, RealExpr rhs);
  static RealExpr mul(RealExpr lhs, RealExpr rhs);
  static RealExpr div(RealExpr lhs, RealExpr rhs);
  static RealExpr pow(RealExpr base, int exponent);
  static RealExpr neg(RealExpr inner);
  static RealExpr sin(RealExpr inner);
  static RealExpr cos(RealExpr inner);
  static RealExpr exp(RealExpr inner);
  static RealExpr abs(RealExpr inner);
  static RealExpr heaviside(RealExpr inner);

  // Node layout is an implementation detail; the type stays incomplete
  // outside the translation unit that defines the tree operations.
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  Kind kind() const;

  // Throws DivByZeroError on a vanishing denominator and never returns a
  // non-finite value (overflow raises instead, keeping downstream hyperbolic
  // values finite).
  double eval(const Bindings& bindings, JumpSide side = JumpSide::right) const;

  bool mentions(Var v) const;

  // No abs/heaviside nodes anywhere, i.e. differentiate() is defined.
  bool differentiable() const;

  // Symbolic derivative with respect to `v`; throws NotDifferentiableError
  // when the tree contains abs or heaviside nodes.
  RealExpr derivative(Var v) const;

  // Sorted distinct roots of all Heaviside arguments, each required to be
  // affine in `v`; expressions without Heaviside nodes yield an empty list.
  std::vector<double> jump_points(Var v) const;

  bool has_heaviside() const;

  // Renders to a string that parses back to a structurally equal tree.
  std::string render() const;

  friend bool operator==(const RealExpr& a, const RealExpr& b) {
    return structurally_equal(a, b);
  }

 private:
  explicit RealExpr(NodePtr node) : node_(std::move(node)) {}

  static bool structurally_equal(const RealExpr& a, const RealExpr& b);

  NodePtr node_;

  friend struct ExprAccess;
};

// Symbolic derivative that treats Heaviside factors as locally constant;
// valid on the open segments between their jump points.
RealExpr derivative_between_jumps(const RealExpr& e, Var v);

}  // namespace hyperbolica
