#pragma once

#include <span>
#include <vector>

namespace hyperbolica {

// Error-free accumulator after Shewchuk/Hettinger: keeps a list of
// non-overlapping partials and rounds once at the end, so the result is the
// exactly rounded sum of the inputs regardless of their order.  Length and
// variation bookkeeping uses this so identities that hold in real arithmetic
// (telescoping, factorization of sum-sets) survive as exact float equalities.
class ExactSum {
 public:
  void add(double x);
  void add(std::span<const double> xs);

  // Adds the exact value of a - b (two terms: the rounded difference plus
  // its error).  Sums of differences then telescope exactly and variation
  // sums are monotone under refinement without rounding artifacts.
  void add_difference(double a, double b);
  void add_abs_difference(double a, double b);

  // Correctly rounded value of the accumulated sum.
  double result() const;

  void reset() { partials_.clear(); }

 private:
  std::vector<double> partials_;
};

double exact_sum(std::span<const double> xs);

}  // namespace hyperbolica
