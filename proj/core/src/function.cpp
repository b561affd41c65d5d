#include "hyperbolica/function.hpp"

namespace hyperbolica {

ScalarComponent::ScalarComponent(RealExpr expr, Var v)
    : expr_(std::move(expr)), var_(v) {
  const Var other = v == Var::x ? Var::y : Var::x;
  if (expr_->mentions(other)) {
    throw InvalidFunctionError(std::string("component over ") + var_name(v) +
                               " must not mention " + var_name(other));
  }
}

ScalarComponent::ScalarComponent(RealCallback callback, Var v)
    : callback_(std::move(callback)), var_(v) {
  if (!callback_) {
    throw InvalidFunctionError("component callback must not be empty");
  }
}

double ScalarComponent::operator()(double value, JumpSide side) const {
  if (expr_) {
    const Bindings b = var_ == Var::x ? Bindings::only_x(value) : Bindings::only_y(value);
    return expr_->eval(b, side);
  }
  return callback_(value);
}

const RealExpr& ScalarComponent::expr() const {
  if (!expr_) {
    throw InvalidFunctionError("component is backed by an opaque callback, not an expression");
  }
  return *expr_;
}

NaturalFunction::NaturalFunction(ScalarComponent f1, ScalarComponent f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (f1_.var() != Var::x || f2_.var() != Var::y) {
    throw InvalidFunctionError("f1 must act on x and f2 on y");
  }
}

NaturalFunction NaturalFunction::parse(std::string_view f1_src, std::string_view f2_src) {
  return NaturalFunction(ScalarComponent(RealExpr::parse(f1_src), Var::x),
                         ScalarComponent(RealExpr::parse(f2_src), Var::y));
}

NaturalFunction NaturalFunction::identity() {
  return NaturalFunction(ScalarComponent(RealExpr::variable(Var::x), Var::x),
                         ScalarComponent(RealExpr::variable(Var::y), Var::y));
}

namespace {

double eval_component(const ScalarComponent& f, double value, const char* label) {
  try {
    return f(value);
  } catch (const DivByZeroError& e) {
    throw DivByZeroError(std::string(e.what()) + " in component " + label);
  }
}

}  // namespace

Hyperbolic NaturalFunction::operator()(Hyperbolic xi) const {
  return {eval_component(f1_, xi.a1, "f1"), eval_component(f2_, xi.a2, "f2")};
}

GeneralFunction::GeneralFunction(RealExpr g1, RealExpr g2)
    : g1_expr_(std::move(g1)), g2_expr_(std::move(g2)) {}

GeneralFunction::GeneralFunction(PlaneCallback g1, PlaneCallback g2)
    : g1_cb_(std::move(g1)), g2_cb_(std::move(g2)) {
  if (!g1_cb_ || !g2_cb_) {
    throw InvalidFunctionError("component callbacks must not be empty");
  }
}

GeneralFunction GeneralFunction::parse(std::string_view g1_src, std::string_view g2_src) {
  return GeneralFunction(RealExpr::parse(g1_src), RealExpr::parse(g2_src));
}

Hyperbolic GeneralFunction::operator()(Hyperbolic xi) const {
  if (g1_expr_) {
    const Bindings b = Bindings::xy(xi.a1, xi.a2);
    return {g1_expr_->eval(b), g2_expr_->eval(b)};
  }
  return {g1_cb_(xi.a1, xi.a2), g2_cb_(xi.a1, xi.a2)};
}

}  // namespace hyperbolica
