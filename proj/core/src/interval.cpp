#include "hyperbolica/interval.hpp"

namespace hyperbolica {

HInterval::HInterval(Hyperbolic lo, Hyperbolic hi, IntervalKind kind)
    : lo_(lo), hi_(hi), kind_(kind) {
  if (!is_finite(lo) || !is_finite(hi)) {
    throw NonFiniteError("interval endpoints must be finite");
  }
  if (!preceq(lo, hi)) {
    throw InvalidIntervalError("interval endpoints are not ordered: " +
                               to_string_idempotent(lo) + " is not below " +
                               to_string_idempotent(hi));
  }
}

bool HInterval::contains(Hyperbolic x) const {
  const bool open_lo =
      kind_ == IntervalKind::open || kind_ == IntervalKind::half_open_left;
  const bool open_hi =
      kind_ == IntervalKind::open || kind_ == IntervalKind::half_open_right;
  const bool above_lo = open_lo ? prec(lo_, x) : preceq(lo_, x);
  const bool below_hi = open_hi ? prec(x, hi_) : preceq(x, hi_);
  return above_lo && below_hi;
}

}  // namespace hyperbolica
