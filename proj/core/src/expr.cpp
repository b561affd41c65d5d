#include "hyperbolica/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "hyperbolica/hyperbolic.hpp"

namespace hyperbolica {

struct RealExpr::Node {
  Kind kind = Kind::constant;
  double value = 0.0;     // constant
  Var var = Var::x;       // variable
  int exponent = 0;       // pow
  NodePtr lhs;
  NodePtr rhs;
};

namespace {

using Kind = RealExpr::Kind;

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::constant: return "constant";
    case Kind::variable: return "variable";
    case Kind::add: return "add";
    case Kind::sub: return "sub";
    case Kind::mul: return "mul";
    case Kind::div: return "div";
    case Kind::pow: return "pow";
    case Kind::neg: return "neg";
    case Kind::sin: return "sin";
    case Kind::cos: return "cos";
    case Kind::exp: return "exp";
    case Kind::abs: return "abs";
    case Kind::heaviside: return "H";
  }
  return "?";
}

}  // namespace

// Builder access used by free helpers inside this translation unit.
struct ExprAccess {
  static RealExpr make(RealExpr::NodePtr node) { return RealExpr(std::move(node)); }
  static const RealExpr::Node& node(const RealExpr& e) { return *e.node_; }
  static RealExpr::NodePtr ptr(const RealExpr& e) { return e.node_; }
};

namespace {

RealExpr make_node(RealExpr::Node node) {
  return ExprAccess::make(std::make_shared<const RealExpr::Node>(std::move(node)));
}

const RealExpr::Node& node_of(const RealExpr& e) { return ExprAccess::node(e); }

RealExpr wrap(RealExpr::NodePtr p) { return ExprAccess::make(std::move(p)); }

bool is_const(const RealExpr& e, double v) {
  return e.kind() == Kind::constant && node_of(e).value == v;
}

}  // namespace

RealExpr RealExpr::constant(double value) {
  Node n;
  n.kind = Kind::constant;
  n.value = value;
  return make_node(std::move(n));
}

RealExpr RealExpr::variable(Var v) {
  Node n;
  n.kind = Kind::variable;
  n.var = v;
  return make_node(std::move(n));
}

namespace {

RealExpr binary(Kind kind, RealExpr lhs, RealExpr rhs) {
  RealExpr::Node n;
  n.kind = kind;
  n.lhs = ExprAccess::ptr(lhs);
  n.rhs = ExprAccess::ptr(rhs);
  return make_node(std::move(n));
}

RealExpr unary(Kind kind, RealExpr inner) {
  RealExpr::Node n;
  n.kind = kind;
  n.lhs = ExprAccess::ptr(inner);
  return make_node(std::move(n));
}

}  // namespace

// The builders fold the identities that keep derivative trees readable
// (x*1, x+0, 0*x, ...); anything beyond that is out of scope.
RealExpr RealExpr::add(RealExpr lhs, RealExpr rhs) {
  if (is_const(lhs, 0.0)) return rhs;
  if (is_const(rhs, 0.0)) return lhs;
  return binary(Kind::add, std::move(lhs), std::move(rhs));
}

RealExpr RealExpr::sub(RealExpr lhs, RealExpr rhs) {
  if (is_const(rhs, 0.0)) return lhs;
  if (is_const(lhs, 0.0)) return neg(std::move(rhs));
  return binary(Kind::sub, std::move(lhs), std::move(rhs));
}

RealExpr RealExpr::mul(RealExpr lhs, RealExpr rhs) {
  if (is_const(lhs, 0.0) || is_const(rhs, 0.0)) return constant(0.0);
  if (is_const(lhs, 1.0)) return rhs;
  if (is_const(rhs, 1.0)) return lhs;
  return binary(Kind::mul, std::move(lhs), std::move(rhs));
}

RealExpr RealExpr::div(RealExpr lhs, RealExpr rhs) {
  if (is_const(rhs, 1.0)) return lhs;
  return binary(Kind::div, std::move(lhs), std::move(rhs));
}

RealExpr RealExpr::pow(RealExpr base, int exponent) {
  if (exponent == 0) return constant(1.0);
  if (exponent == 1) return base;
  Node n;
  n.kind = Kind::pow;
  n.exponent = exponent;
  n.lhs = ExprAccess::ptr(base);
  return make_node(std::move(n));
}

RealExpr RealExpr::neg(RealExpr inner) {
  if (inner.kind() == Kind::constant) return constant(-node_of(inner).value);
  return unary(Kind::neg, std::move(inner));
}

RealExpr RealExpr::sin(RealExpr inner) { return unary(Kind::sin, std::move(inner)); }
RealExpr RealExpr::cos(RealExpr inner) { return unary(Kind::cos, std::move(inner)); }
RealExpr RealExpr::exp(RealExpr inner) { return unary(Kind::exp, std::move(inner)); }
RealExpr RealExpr::abs(RealExpr inner) { return unary(Kind::abs, std::move(inner)); }
RealExpr RealExpr::heaviside(RealExpr inner) {
  return unary(Kind::heaviside, std::move(inner));
}

// ---- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  RealExpr parse() {
    RealExpr e = expression();
    skip_ws();
    if (pos_ < src_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) {
      throw SyntaxError(std::string("expected ") + what, pos_);
    }
  }

  RealExpr expression() {
    RealExpr e = term();
    for (;;) {
      if (consume('+')) {
        e = RealExpr::add(std::move(e), term());
      } else if (consume('-')) {
        e = RealExpr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  RealExpr term() {
    RealExpr e = factor();
    for (;;) {
      if (consume('*')) {
        e = RealExpr::mul(std::move(e), factor());
      } else if (consume('/')) {
        e = RealExpr::div(std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  RealExpr factor() {
    RealExpr base = atom();
    if (consume('^')) {
      return RealExpr::pow(std::move(base), integer());
    }
    return base;
  }

  int integer() {
    skip_ws();
    const bool negative = pos_ < src_.size() && src_[pos_] == '-';
    if (negative) ++pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      throw SyntaxError("expected an integer exponent", pos_);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc{}) {
      throw SyntaxError("bad integer exponent", pos_);
    }
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return negative ? -value : value;
  }

  RealExpr atom() {
    skip_ws();
    if (pos_ >= src_.size()) {
      throw SyntaxError("unexpected end of input", pos_);
    }
    const char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      return RealExpr::neg(atom());
    }
    if (c == '(') {
      ++pos_;
      RealExpr e = expression();
      expect(')', "')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return identifier();
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  RealExpr number() {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc{}) {
      throw SyntaxError("bad number literal", pos_);
    }
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return RealExpr::constant(value);
  }

  RealExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return RealExpr::variable(Var::x);
    if (name == "y") return RealExpr::variable(Var::y);

    RealExpr (*make)(RealExpr) = nullptr;
    if (name == "sin") make = &RealExpr::sin;
    else if (name == "cos") make = &RealExpr::cos;
    else if (name == "exp") make = &RealExpr::exp;
    else if (name == "abs") make = &RealExpr::abs;
    else if (name == "H") make = &RealExpr::heaviside;
    else throw UnknownIdentifierError(std::string(name), start);

    expect('(', "'(' after function name");
    RealExpr arg = expression();
    expect(')', "')'");
    return make(std::move(arg));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

RealExpr RealExpr::parse(std::string_view src) { return Parser(src).parse(); }

// ---- evaluation ------------------------------------------------------------

namespace {

double eval_node(const RealExpr::Node& n, const Bindings& bindings, JumpSide side);

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error("non-finite-result", std::string(what) + " produced a non-finite value");
  }
  return v;
}

double eval_node(const RealExpr::Node& n, const Bindings& bindings, JumpSide side) {
  switch (n.kind) {
    case Kind::constant:
      return n.value;
    case Kind::variable: {
      const std::optional<double>& slot = n.var == Var::x ? bindings.x : bindings.y;
      if (!slot) {
        throw UnboundVariableError(std::string("variable ") + var_name(n.var) +
                                   " is not bound");
      }
      return *slot;
    }
    case Kind::add:
      return finite_or_throw(eval_node(*n.lhs, bindings, side) +
                                 eval_node(*n.rhs, bindings, side),
                             "addition");
    case Kind::sub:
      return finite_or_throw(eval_node(*n.lhs, bindings, side) -
                                 eval_node(*n.rhs, bindings, side),
                             "subtraction");
    case Kind::mul:
      return finite_or_throw(eval_node(*n.lhs, bindings, side) *
                                 eval_node(*n.rhs, bindings, side),
                             "multiplication");
    case Kind::div: {
      const double denom = eval_node(*n.rhs, bindings, side);
      if (denom == 0.0) {
        throw DivByZeroError("division by zero");
      }
      return finite_or_throw(eval_node(*n.lhs, bindings, side) / denom, "division");
    }
    case Kind::pow: {
      const double base = eval_node(*n.lhs, bindings, side);
      if (n.exponent < 0 && base == 0.0) {
        throw DivByZeroError("zero raised to a negative exponent");
      }
      return finite_or_throw(std::pow(base, n.exponent), "pow");
    }
    case Kind::neg:
      return -eval_node(*n.lhs, bindings, side);
    case Kind::sin:
      return std::sin(eval_node(*n.lhs, bindings, side));
    case Kind::cos:
      return std::cos(eval_node(*n.lhs, bindings, side));
    case Kind::exp:
      return finite_or_throw(std::exp(eval_node(*n.lhs, bindings, side)), "exp");
    case Kind::abs:
      return std::fabs(eval_node(*n.lhs, bindings, side));
    case Kind::heaviside: {
      const double u = eval_node(*n.lhs, bindings, side);
      // Right-continuous step: H(0) = 1.  Left-side evaluation yields the
      // limit from below instead, which is 0 exactly at the jump.
      if (side == JumpSide::left) return u > 0.0 ? 1.0 : 0.0;
      return u >= 0.0 ? 1.0 : 0.0;
    }
  }
  throw Error("internal", "unreachable expression kind");
}

}  // namespace

RealExpr::Kind RealExpr::kind() const { return node_->kind; }

double RealExpr::eval(const Bindings& bindings, JumpSide side) const {
  return eval_node(*node_, bindings, side);
}

bool RealExpr::mentions(Var v) const {
  const Node& n = *node_;
  if (n.kind == Kind::variable) return n.var == v;
  bool found = false;
  if (n.lhs) found = wrap(n.lhs).mentions(v);
  if (!found && n.rhs) found = wrap(n.rhs).mentions(v);
  return found;
}

bool RealExpr::differentiable() const {
  const Node& n = *node_;
  if (n.kind == Kind::abs || n.kind == Kind::heaviside) return false;
  if (n.lhs && !wrap(n.lhs).differentiable()) return false;
  if (n.rhs && !wrap(n.rhs).differentiable()) return false;
  return true;
}

bool RealExpr::has_heaviside() const {
  const Node& n = *node_;
  if (n.kind == Kind::heaviside) return true;
  if (n.lhs && wrap(n.lhs).has_heaviside()) return true;
  if (n.rhs && wrap(n.rhs).has_heaviside()) return true;
  return false;
}

namespace {

// `piecewise` maps Heaviside factors to derivative zero, valid on the open
// segments between their jumps; the public entry point rejects them instead.
RealExpr derive(const RealExpr& e, Var v, bool piecewise) {
  const RealExpr::Node& n = node_of(e);
  switch (n.kind) {
    case Kind::constant:
      return RealExpr::constant(0.0);
    case Kind::variable:
      return RealExpr::constant(n.var == v ? 1.0 : 0.0);
    case Kind::add:
      return RealExpr::add(derive(wrap(n.lhs), v, piecewise),
                           derive(wrap(n.rhs), v, piecewise));
    case Kind::sub:
      return RealExpr::sub(derive(wrap(n.lhs), v, piecewise),
                           derive(wrap(n.rhs), v, piecewise));
    case Kind::mul:
      return RealExpr::add(
          RealExpr::mul(derive(wrap(n.lhs), v, piecewise), wrap(n.rhs)),
          RealExpr::mul(wrap(n.lhs), derive(wrap(n.rhs), v, piecewise)));
    case Kind::div:
      return RealExpr::div(
          RealExpr::sub(
              RealExpr::mul(derive(wrap(n.lhs), v, piecewise), wrap(n.rhs)),
              RealExpr::mul(wrap(n.lhs), derive(wrap(n.rhs), v, piecewise))),
          RealExpr::pow(wrap(n.rhs), 2));
    case Kind::pow:
      return RealExpr::mul(
          RealExpr::mul(RealExpr::constant(n.exponent),
                        RealExpr::pow(wrap(n.lhs), n.exponent - 1)),
          derive(wrap(n.lhs), v, piecewise));
    case Kind::neg:
      return RealExpr::neg(derive(wrap(n.lhs), v, piecewise));
    case Kind::sin:
      return RealExpr::mul(RealExpr::cos(wrap(n.lhs)),
                           derive(wrap(n.lhs), v, piecewise));
    case Kind::cos:
      return RealExpr::neg(RealExpr::mul(RealExpr::sin(wrap(n.lhs)),
                                         derive(wrap(n.lhs), v, piecewise)));
    case Kind::exp:
      return RealExpr::mul(RealExpr::exp(wrap(n.lhs)),
                           derive(wrap(n.lhs), v, piecewise));
    case Kind::abs:
      throw NotDifferentiableError("abs");
    case Kind::heaviside:
      if (piecewise) return RealExpr::constant(0.0);
      throw NotDifferentiableError("H");
  }
  throw Error("internal", "unreachable expression kind");
}

}  // namespace

RealExpr RealExpr::derivative(Var v) const { return derive(*this, v, false); }

// Derivative valid between jump points (Heaviside terms frozen); used by the
// piecewise-monotonicity certification.
RealExpr derivative_between_jumps(const RealExpr& e, Var v) {
  return derive(e, v, true);
}

// ---- jump points ---------------------------------------------------------

namespace {

struct Affine {
  double slope = 0.0;
  double intercept = 0.0;
};

// Returns the affine form of `e` in `v` when it has one; constants have
// slope zero.  Nested Heaviside/abs/... of non-constant arguments make the
// expression non-affine.
std::optional<Affine> affine_form(const RealExpr& e, Var v) {
  const RealExpr::Node& n = node_of(e);
  switch (n.kind) {
    case Kind::constant:
      return Affine{0.0, n.value};
    case Kind::variable:
      return n.var == v ? Affine{1.0, 0.0} : std::optional<Affine>{};
    case Kind::add: {
      auto l = affine_form(wrap(n.lhs), v);
      auto r = affine_form(wrap(n.rhs), v);
      if (!l || !r) return std::nullopt;
      return Affine{l->slope + r->slope, l->intercept + r->intercept};
    }
    case Kind::sub: {
      auto l = affine_form(wrap(n.lhs), v);
      auto r = affine_form(wrap(n.rhs), v);
      if (!l || !r) return std::nullopt;
      return Affine{l->slope - r->slope, l->intercept - r->intercept};
    }
    case Kind::mul: {
      auto l = affine_form(wrap(n.lhs), v);
      auto r = affine_form(wrap(n.rhs), v);
      if (!l || !r) return std::nullopt;
      if (l->slope == 0.0) return Affine{l->intercept * r->slope, l->intercept * r->intercept};
      if (r->slope == 0.0) return Affine{r->intercept * l->slope, r->intercept * l->intercept};
      return std::nullopt;
    }
    case Kind::div: {
      auto l = affine_form(wrap(n.lhs), v);
      auto r = affine_form(wrap(n.rhs), v);
      if (!l || !r || r->slope != 0.0 || r->intercept == 0.0) return std::nullopt;
      return Affine{l->slope / r->intercept, l->intercept / r->intercept};
    }
    case Kind::neg: {
      auto inner = affine_form(wrap(n.lhs), v);
      if (!inner) return std::nullopt;
      return Affine{-inner->slope, -inner->intercept};
    }
    case Kind::pow: {
      auto inner = affine_form(wrap(n.lhs), v);
      if (!inner) return std::nullopt;
      if (n.exponent == 1) return inner;
      if (inner->slope != 0.0) return std::nullopt;
      if (inner->intercept == 0.0 && n.exponent < 0) return std::nullopt;
      return Affine{0.0, std::pow(inner->intercept, n.exponent)};
    }
    case Kind::sin:
    case Kind::cos:
    case Kind::exp:
    case Kind::abs:
    case Kind::heaviside: {
      auto inner = affine_form(wrap(n.lhs), v);
      if (!inner || inner->slope != 0.0) return std::nullopt;
      const double u = inner->intercept;
      double value = 0.0;
      switch (n.kind) {
        case Kind::sin: value = std::sin(u); break;
        case Kind::cos: value = std::cos(u); break;
        case Kind::exp: value = std::exp(u); break;
        case Kind::abs: value = std::fabs(u); break;
        case Kind::heaviside: value = u >= 0.0 ? 1.0 : 0.0; break;
        default: break;
      }
      return Affine{0.0, value};
    }
  }
  return std::nullopt;
}

void collect_jump_roots(const RealExpr& e, Var v, std::vector<double>& roots) {
  const RealExpr::Node& n = node_of(e);
  if (n.kind == Kind::heaviside) {
    const RealExpr arg = wrap(n.lhs);
    const auto affine = affine_form(arg, v);
    if (!affine) {
      throw NonAffineJumpError("Heaviside argument '" + arg.render() +
                               "' is not affine in " + var_name(v));
    }
    if (affine->slope != 0.0) {
      roots.push_back(-affine->intercept / affine->slope);
    }
    // Still recurse: the argument may nest further Heaviside factors.
  }
  if (n.lhs) collect_jump_roots(wrap(n.lhs), v, roots);
  if (n.rhs) collect_jump_roots(wrap(n.rhs), v, roots);
}

}  // namespace

std::vector<double> RealExpr::jump_points(Var v) const {
  std::vector<double> roots;
  collect_jump_roots(*this, v, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---- rendering ---------------------------------------------------------

namespace {

// Grammar levels: 1 = expression (+/-), 2 = term (*,/), 3 = factor (^),
// 4 = atom.  A child is parenthesized whenever its level is too weak for
// the position it is printed in.
int level_of(const RealExpr::Node& n) {
  switch (n.kind) {
    case Kind::add:
    case Kind::sub:
      return 1;
    case Kind::mul:
    case Kind::div:
      return 2;
    case Kind::pow:
      return 3;
    case Kind::neg:
      // '-' binds at the atom level but a negation is not a valid pow base
      // or right operand without parentheses.
      return 3;
    default:
      return 4;
  }
}

void render_node(const RealExpr::Node& n, int min_level, std::string& out) {
  const int level = level_of(n);
  const bool parens = level < min_level;
  if (parens) out += '(';
  switch (n.kind) {
    case Kind::constant: {
      if (n.value < 0.0) {
        out += '-';
        out += format_double(-n.value);
      } else {
        out += format_double(n.value);
      }
      break;
    }
    case Kind::variable:
      out += var_name(n.var);
      break;
    case Kind::add:
      render_node(*n.lhs, 1, out);
      out += " + ";
      render_node(*n.rhs, 2, out);
      break;
    case Kind::sub:
      render_node(*n.lhs, 1, out);
      out += " - ";
      render_node(*n.rhs, 2, out);
      break;
    case Kind::mul:
      render_node(*n.lhs, 2, out);
      out += '*';
      render_node(*n.rhs, 3, out);
      break;
    case Kind::div:
      render_node(*n.lhs, 2, out);
      out += '/';
      render_node(*n.rhs, 3, out);
      break;
    case Kind::pow:
      render_node(*n.lhs, 4, out);
      out += '^';
      if (n.exponent < 0) {
        out += '-';
        out += std::to_string(-n.exponent);
      } else {
        out += std::to_string(n.exponent);
      }
      break;
    case Kind::neg:
      out += '-';
      render_node(*n.lhs, 4, out);
      break;
    case Kind::sin:
    case Kind::cos:
    case Kind::exp:
    case Kind::abs:
    case Kind::heaviside:
      out += kind_name(n.kind);
      out += '(';
      render_node(*n.lhs, 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string RealExpr::render() const {
  std::string out;
  render_node(*node_, 1, out);
  return out;
}

bool RealExpr::structurally_equal(const RealExpr& a, const RealExpr& b) {
  const Node& na = *a.node_;
  const Node& nb = *b.node_;
  if (na.kind != nb.kind) return false;
  switch (na.kind) {
    case Kind::constant:
      return na.value == nb.value;
    case Kind::variable:
      return na.var == nb.var;
    case Kind::pow:
      if (na.exponent != nb.exponent) return false;
      return structurally_equal(wrap(na.lhs), wrap(nb.lhs));
    default:
      if (static_cast<bool>(na.lhs) != static_cast<bool>(nb.lhs)) return false;
      if (static_cast<bool>(na.rhs) != static_cast<bool>(nb.rhs)) return false;
      if (na.lhs && !structurally_equal(wrap(na.lhs), wrap(nb.lhs))) return false;
      if (na.rhs && !structurally_equal(wrap(na.rhs), wrap(nb.rhs))) return false;
      return true;
  }
}

}  // namespace hyperbolica
