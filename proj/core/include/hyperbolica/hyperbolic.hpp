#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "hyperbolica/errors.hpp"

namespace hyperbolica {

// A hyperbolic (split-complex) number stored by its idempotent components:
//   xi = a1*e1 + a2*e2,  e1 = (1+j)/2,  e2 = (1-j)/2,  j*j = 1.
// In this basis the ring structure is componentwise, which is why the
// idempotent pair is the primary storage and the canonical (t, s) pair with
// xi = t + s*j is derived.
struct Hyperbolic {
  double a1 = 0.0;  // coefficient of e1
  double a2 = 0.0;  // coefficient of e2

  struct Canonical {
    double t = 0.0;  // real part
    double s = 0.0;  // coefficient of the unipotent j
  };

  static constexpr Hyperbolic zero() { return {0.0, 0.0}; }
  static constexpr Hyperbolic one() { return {1.0, 1.0}; }
  static constexpr Hyperbolic unit_e1() { return {1.0, 0.0}; }
  static constexpr Hyperbolic unit_e2() { return {0.0, 1.0}; }
  static constexpr Hyperbolic unit_j() { return {1.0, -1.0}; }

  // Embedding of the real line, x -> x*e1 + x*e2.
  static constexpr Hyperbolic embed(double x) { return {x, x}; }

  static constexpr Hyperbolic from_canonical(double t, double s) {
    return {t + s, t - s};
  }

  constexpr Canonical to_canonical() const {
    return {(a1 + a2) / 2.0, (a1 - a2) / 2.0};
  }

  constexpr bool is_zero() const { return a1 == 0.0 && a2 == 0.0; }

  // Membership in the positive cone D+ (both components > 0) and its
  // closure D0+; these are the ranges epsilon and delta quantify over.
  constexpr bool strictly_positive() const { return a1 > 0.0 && a2 > 0.0; }
  constexpr bool nonnegative() const { return a1 >= 0.0 && a2 >= 0.0; }

  // Nonzero with a vanishing idempotent component; such values have no
  // multiplicative inverse.
  constexpr bool is_zero_divisor() const {
    return !is_zero() && (a1 == 0.0 || a2 == 0.0);
  }

  Hyperbolic inverse() const;

  friend constexpr Hyperbolic operator+(Hyperbolic x, Hyperbolic y) {
    return {x.a1 + y.a1, x.a2 + y.a2};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic x, Hyperbolic y) {
    return {x.a1 - y.a1, x.a2 - y.a2};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic x) { return {-x.a1, -x.a2}; }
  friend constexpr Hyperbolic operator*(Hyperbolic x, Hyperbolic y) {
    return {x.a1 * y.a1, x.a2 * y.a2};
  }
  friend constexpr Hyperbolic operator*(double c, Hyperbolic x) {
    return {c * x.a1, c * x.a2};
  }
  friend constexpr Hyperbolic operator*(Hyperbolic x, double c) { return c * x; }
  friend Hyperbolic operator/(Hyperbolic x, Hyperbolic y) {
    return x * y.inverse();
  }

  // Exact componentwise equality; partition bookkeeping relies on it.
  friend constexpr bool operator==(Hyperbolic x, Hyperbolic y) {
    return x.a1 == y.a1 && x.a2 == y.a2;
  }
};

inline bool is_finite(Hyperbolic x) {
  return std::isfinite(x.a1) && std::isfinite(x.a2);
}

// ---- partial order -----------------------------------------------------

enum class Order { less, equal, greater, incomparable };

struct OrderRelation {
  Order order = Order::incomparable;
  // For less/greater: true iff both component inequalities are strict.
  bool strict = false;

  constexpr bool is_leq() const {
    return order == Order::less || order == Order::equal;
  }
  constexpr bool is_geq() const {
    return order == Order::greater || order == Order::equal;
  }
  constexpr bool comparable() const { return order != Order::incomparable; }
};

OrderRelation compare(Hyperbolic x, Hyperbolic y);

// x ⪯ y (componentwise <=).
inline bool preceq(Hyperbolic x, Hyperbolic y) {
  return x.a1 <= y.a1 && x.a2 <= y.a2;
}

// x ≺ y (both components strictly smaller).
inline bool prec(Hyperbolic x, Hyperbolic y) {
  return x.a1 < y.a1 && x.a2 < y.a2;
}

// ---- metric and lattice operations --------------------------------------

// Hyperbolic absolute value |x|_k, valued in the nonnegative cone.
inline Hyperbolic abs_k(Hyperbolic x) {
  return {std::fabs(x.a1), std::fabs(x.a2)};
}

// The usual hyperbolic metric D(x, y) = |x - y|_k.
inline Hyperbolic metric(Hyperbolic x, Hyperbolic y) { return abs_k(x - y); }

// Componentwise join of two values.
inline Hyperbolic sup(Hyperbolic x, Hyperbolic y) {
  return {std::fmax(x.a1, y.a1), std::fmax(x.a2, y.a2)};
}

// Componentwise supremum of a nonempty finite set; the least hyperbolic
// upper bound even when members are mutually incomparable.
Hyperbolic sup_set(std::span<const Hyperbolic> values);

// ---- textual forms -------------------------------------------------------

// "a1*e1 + a2*e2", shortest round-trip number formatting.
std::string to_string_idempotent(Hyperbolic x);

// "t + s*j".
std::string to_string_canonical(Hyperbolic x);

// Accepts both textual forms above, plus bare reals (embedded) and any
// signed combination of `e1`, `e2`, `j` and plain terms.
Hyperbolic parse_hyperbolic(std::string_view text);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace hyperbolica
