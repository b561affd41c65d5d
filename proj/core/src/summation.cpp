#include "hyperbolica/summation.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace hyperbolica {

void ExactSum::add(double x) {
  // Fold x into the expansion with two_sum steps; surviving round-off terms
  // stay behind as smaller partials, so no information is lost.
  std::size_t kept = 0;
  for (std::size_t j = 0; j < partials_.size(); ++j) {
    double y = partials_[j];
    if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
    const double hi = x + y;
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[kept++] = lo;
    x = hi;
  }
  partials_.resize(kept);
  partials_.push_back(x);
}

void ExactSum::add(std::span<const double> xs) {
  for (double x : xs) add(x);
}

void ExactSum::add_difference(double a, double b) {
  // two_sum of a and -b: s + e reproduces a - b exactly.
  const double s = a - b;
  const double bv = s - a;
  const double e = (a - (s - bv)) + (-b - bv);
  add(s);
  if (e != 0.0) add(e);
}

void ExactSum::add_abs_difference(double a, double b) {
  // The rounded difference s carries the sign of the exact one (IEEE
  // subtraction yields zero only for equal operands), so |a - b| is either
  // (s, e) or (-s, -e).
  const double s = a - b;
  const double bv = s - a;
  const double e = (a - (s - bv)) + (-b - bv);
  if (s < 0.0) {
    add(-s);
    if (e != 0.0) add(-e);
  } else {
    add(s);
    if (e != 0.0) add(e);
  }
}

double ExactSum::result() const {
  // Round from the largest partial down; when the first residual appears,
  // the remaining (strictly smaller) partials can only matter through the
  // round-half-to-even rule, handled by the final adjustment.
  if (partials_.empty()) return 0.0;
  std::size_t i = partials_.size();
  double total = partials_[--i];
  double residual = 0.0;
  while (i > 0) {
    const double x = total;
    const double y = partials_[--i];
    total = x + y;
    residual = y - (total - x);
    if (residual != 0.0) break;
  }
  if (i > 0 && ((residual < 0.0 && partials_[i - 1] < 0.0) ||
                (residual > 0.0 && partials_[i - 1] > 0.0))) {
    const double adjusted = total + residual * 2.0;
    if (residual * 2.0 == adjusted - total) total = adjusted;
  }
  return total;
}

double exact_sum(std::span<const double> xs) {
  ExactSum sum;
  sum.add(xs);
  return sum.result();
}

}  // namespace hyperbolica
