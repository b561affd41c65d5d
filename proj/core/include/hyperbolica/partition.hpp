#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hyperbolica/interval.hpp"

namespace hyperbolica {

// ---- validation errors ---------------------------------------------------

class EndpointMismatchError : public ValidationError {
 public:
  explicit EndpointMismatchError(const std::string& what)
      : ValidationError("endpoint-mismatch", what) {}
};

class DuplicatePointError : public ValidationError {
 public:
  DuplicatePointError(const std::string& what, std::size_t index)
      : ValidationError("duplicate-point", what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NotAChainError : public ValidationError {
 public:
  NotAChainError(const std::string& what, std::size_t index)
      : ValidationError("not-a-chain", what), index_(index) {}
  // Index of the first offending adjacent pair (points index -> index+1).
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class LengthMismatchError : public ValidationError {
 public:
  LengthMismatchError(Hyperbolic actual, Hyperbolic expected);
  Hyperbolic actual() const noexcept { return actual_; }
  Hyperbolic expected() const noexcept { return expected_; }

 private:
  Hyperbolic actual_;
  Hyperbolic expected_;
};

class AreaMismatchError : public ValidationError {
 public:
  AreaMismatchError(double actual, double expected);
  double actual() const noexcept { return actual_; }
  double expected() const noexcept { return expected_; }

 private:
  double actual_;
  double expected_;
};

class OverlappingCellsError : public ValidationError {
 public:
  OverlappingCellsError(std::size_t first, std::size_t second);
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class UnsortedInputError : public ValidationError {
 public:
  UnsortedInputError(const std::string& what, std::size_t index)
      : ValidationError("unsorted-input", what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EndpointMissingError : public ValidationError {
 public:
  explicit EndpointMissingError(const std::string& what)
      : ValidationError("endpoint-missing", what) {}
};

class DegenerateIntervalError : public ValidationError {
 public:
  explicit DegenerateIntervalError(const std::string& what)
      : ValidationError("degenerate-interval", what) {}
};

// ---- strong partitions -----------------------------------------------------

// A finite chain rho_0 ⪯ rho_1 ⪯ ... ⪯ rho_n of pairwise distinct points with
// rho_0 = lo and rho_n = hi.  Degenerate steps (one component frozen) are
// allowed; incomparable or repeated consecutive points are not.
class StrongPartition {
 public:
  // Validates endpoint, distinctness and chain clauses in that order and
  // reports the first violation.
  static StrongPartition validate(std::vector<Hyperbolic> points,
                                  const HInterval& interval);

  const HInterval& interval() const { return interval_; }
  std::span<const Hyperbolic> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // True when some step has zero extent in a component.
  bool has_degenerate_steps() const;

  // Sum of lambda_k over the successive sub-intervals, exactly rounded.
  Hyperbolic telescoped_lengths() const;

  // Componentwise point lists with consecutive duplicates removed; each is a
  // strictly increasing partition of the corresponding projected interval.
  std::pair<std::vector<double>, std::vector<double>> project() const;

  // diam(P_e1)*e1 + diam(P_e2)*e2, computed on the deduped projections.
  Hyperbolic diameter() const;

 private:
  StrongPartition(std::vector<Hyperbolic> points, HInterval interval)
      : points_(std::move(points)), interval_(std::move(interval)) {}

  std::vector<Hyperbolic> points_;
  HInterval interval_;
};

// ---- weak partitions -------------------------------------------------------

// A family of sub-intervals whose lambda_k lengths sum exactly to the length
// of the enclosing interval.  Neither coverage nor disjointness is checked:
// the length identity is the whole definition, and families of mutually
// disjoint members are legitimate weak partitions.
class WeakPartition {
 public:
  // `tolerance` <= 0 demands exact float equality of the exactly rounded
  // length sum (the default); a positive value allows that absolute slack
  // per component.
  static WeakPartition validate(std::vector<HInterval> subintervals,
                                const HInterval& interval,
                                double tolerance = 0.0);

  const HInterval& interval() const { return interval_; }
  std::span<const HInterval> subintervals() const { return subintervals_; }

  Hyperbolic length_sum() const;

 private:
  WeakPartition(std::vector<HInterval> subintervals, HInterval interval)
      : subintervals_(std::move(subintervals)), interval_(std::move(interval)) {}

  std::vector<HInterval> subintervals_;
  HInterval interval_;
};

// ---- regular partitions ------------------------------------------------

// Axis-aligned rectangle decomposition: Euclidean areas must sum to the area
// of the interval (1e-12 relative) and interiors must be pairwise disjoint.
class RegularPartition {
 public:
  static RegularPartition validate(std::vector<HInterval> cells,
                                   const HInterval& interval);

  const HInterval& interval() const { return interval_; }
  std::span<const HInterval> cells() const { return cells_; }

  double area_sum() const;

 private:
  RegularPartition(std::vector<HInterval> cells, HInterval interval)
      : cells_(std::move(cells)), interval_(std::move(interval)) {}

  std::vector<HInterval> cells_;
  HInterval interval_;
};

// ---- construction from real partitions -----------------------------------

// The step rule "advance p, q jointly; when one endpoint repeats the other
// must advance" admits many interleavings, so three deterministic modes are
// fixed.  Diagonal advances both components until one list is exhausted;
// the staircase modes sweep one axis completely first and witness the
// extreme chains with degenerate steps.
enum class MergeMode { diagonal, e1_first, e2_first };

// P partitions [p.front(), p.back()] and Q partitions [q.front(), q.back()]
// (sorted, strictly increasing).  The result is a strong partition of the
// product interval whose deduped projections recover P and Q exactly.
StrongPartition merge_real_partitions(std::span<const double> p,
                                      std::span<const double> q,
                                      MergeMode mode = MergeMode::diagonal);

inline StrongPartition merge_real_partitions(std::initializer_list<double> p,
                                             std::initializer_list<double> q,
                                             MergeMode mode = MergeMode::diagonal) {
  return merge_real_partitions(std::span<const double>(p.begin(), p.size()),
                               std::span<const double>(q.begin(), q.size()), mode);
}

// n+1 diagonal points lo + (j/n)(hi - lo) with endpoints pinned exactly.
// Components of zero extent stay frozen at their constant value; a fully
// degenerate interval only admits the single-point partition (n must be 1).
StrongPartition uniform_partition(const HInterval& interval, int n);

// Refinement by componentwise midpoint insertion into every step (skipping
// midpoints that collide with an endpoint of their step).
StrongPartition refine_midpoints(const StrongPartition& partition);

}  // namespace hyperbolica
