#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hyperbolica/expr.hpp"
#include "hyperbolica/hyperbolic.hpp"

namespace hyperbolica {

using RealCallback = std::function<double(double)>;
using PlaneCallback = std::function<double(double, double)>;

// One idempotent component of a natural hyperbolic function: a univariate
// real function given either as a parsed expression (enabling symbolic
// derivatives and jump extraction) or as an opaque callback for embedding.
class ScalarComponent {
 public:
  // Validates that `expr` mentions no variable other than `v`.
  ScalarComponent(RealExpr expr, Var v);
  ScalarComponent(RealCallback callback, Var v);

  double operator()(double value, JumpSide side = JumpSide::right) const;

  Var var() const { return var_; }
  bool has_expr() const { return expr_.has_value(); }
  const RealExpr& expr() const;

 private:
  std::optional<RealExpr> expr_;
  RealCallback callback_;
  Var var_;
};

// F = F1(x)*e1 + F2(y)*e2 with univariate real components acting on the
// respective idempotent projections of the argument.
class NaturalFunction {
 public:
  NaturalFunction(ScalarComponent f1, ScalarComponent f2);

  // Parses component expressions; f1 may mention only x and f2 only y.
  static NaturalFunction parse(std::string_view f1_src, std::string_view f2_src);

  static NaturalFunction identity();

  // Evaluation errors are re-raised with the offending component named.
  Hyperbolic operator()(Hyperbolic xi) const;

  const ScalarComponent& f1() const { return f1_; }
  const ScalarComponent& f2() const { return f2_; }

 private:
  ScalarComponent f1_;
  ScalarComponent f2_;
};

// F = G1(x, y)*e1 + G2(x, y)*e2 with bivariate components; the general shape
// that variation sums and the brute-force sum-set accept.
class GeneralFunction {
 public:
  GeneralFunction(RealExpr g1, RealExpr g2);
  GeneralFunction(PlaneCallback g1, PlaneCallback g2);

  static GeneralFunction parse(std::string_view g1_src, std::string_view g2_src);

  Hyperbolic operator()(Hyperbolic xi) const;

 private:
  std::optional<RealExpr> g1_expr_, g2_expr_;
  PlaneCallback g1_cb_, g2_cb_;
};

}  // namespace hyperbolica
