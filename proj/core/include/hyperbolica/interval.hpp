#pragma once

#include <utility>

#include "hyperbolica/hyperbolic.hpp"

namespace hyperbolica {

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend constexpr bool operator==(RealInterval, RealInterval) = default;
};

enum class IntervalKind { closed, open, half_open_left, half_open_right };

// An order interval [lo, hi]_k = { xi : lo ⪯ xi ⪯ hi }; geometrically an
// axis-aligned rectangle in idempotent coordinates.  Endpoints must satisfy
// lo ⪯ hi (equality in a component makes the interval degenerate, which is
// allowed and flagged rather than rejected).
class HInterval {
 public:
  HInterval(Hyperbolic lo, Hyperbolic hi, IntervalKind kind = IntervalKind::closed);

  const Hyperbolic& lo() const { return lo_; }
  const Hyperbolic& hi() const { return hi_; }
  IntervalKind kind() const { return kind_; }

  // True when at least one component has zero extent.
  bool degenerate() const { return lo_.a1 == hi_.a1 || lo_.a2 == hi_.a2; }
  bool fully_degenerate() const { return lo_ == hi_; }

  // lambda_k = hi - lo, identical for all four interval kinds.
  Hyperbolic length() const { return hi_ - lo_; }

  // Idempotent projections ([a1,b1], [a2,b2]).
  std::pair<RealInterval, RealInterval> projections() const {
    return {RealInterval{lo_.a1, hi_.a1}, RealInterval{lo_.a2, hi_.a2}};
  }

  // Lebesgue area of the rectangle in the Euclidean plane.
  double euclidean_area() const { return (hi_.a1 - lo_.a1) * (hi_.a2 - lo_.a2); }

  // Membership respecting the interval kind on both components.
  bool contains(Hyperbolic x) const;

  friend bool operator==(const HInterval& a, const HInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.kind_ == b.kind_;
  }

 private:
  Hyperbolic lo_;
  Hyperbolic hi_;
  IntervalKind kind_;
};

class InvalidIntervalError : public ValidationError {
 public:
  explicit InvalidIntervalError(const std::string& what)
      : ValidationError("invalid-interval", what) {}
};

}  // namespace hyperbolica
