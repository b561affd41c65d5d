#include "hyperbolica/partition.hpp"

#include <algorithm>
#include <cmath>

#include "hyperbolica/summation.hpp"

namespace hyperbolica {

LengthMismatchError::LengthMismatchError(Hyperbolic actual, Hyperbolic expected)
    : ValidationError("length-mismatch",
                      "sub-interval lengths sum to " + to_string_idempotent(actual) +
                          " but the interval has length " +
                          to_string_idempotent(expected)),
      actual_(actual),
      expected_(expected) {}

AreaMismatchError::AreaMismatchError(double actual, double expected)
    : ValidationError("area-mismatch",
                      "cell areas sum to " + format_double(actual) +
                          " but the interval has area " + format_double(expected)),
      actual_(actual),
      expected_(expected) {}

OverlappingCellsError::OverlappingCellsError(std::size_t first, std::size_t second)
    : ValidationError("overlapping-cells",
                      "cells " + std::to_string(first) + " and " +
                          std::to_string(second) + " have intersecting interiors"),
      first_(first),
      second_(second) {}

// ---- StrongPartition -----------------------------------------------------

StrongPartition StrongPartition::validate(std::vector<Hyperbolic> points,
                                          const HInterval& interval) {
  if (points.empty()) {
    throw EndpointMissingError("a strong partition needs at least one point");
  }
  for (const Hyperbolic& p : points) {
    if (!is_finite(p)) throw NonFiniteError("partition points must be finite");
  }
  if (!(points.front() == interval.lo())) {
    throw EndpointMismatchError("first point " +
                                to_string_idempotent(points.front()) +
                                " differs from the interval's lower endpoint");
  }
  if (!(points.back() == interval.hi())) {
    throw EndpointMismatchError("last point " +
                                to_string_idempotent(points.back()) +
                                " differs from the interval's upper endpoint");
  }
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    const OrderRelation rel = compare(points[j], points[j + 1]);
    if (rel.order == Order::equal) {
      throw DuplicatePointError("points " + std::to_string(j) + " and " +
                                    std::to_string(j + 1) + " coincide",
                                j);
    }
    if (rel.order != Order::less) {
      throw NotAChainError(
          "points " + std::to_string(j) + " and " + std::to_string(j + 1) +
              (rel.order == Order::incomparable ? " are incomparable"
                                                : " are out of order"),
          j);
    }
  }
  // A nondecreasing chain with distinct neighbours is pairwise distinct.
  return StrongPartition(std::move(points), interval);
}

bool StrongPartition::has_degenerate_steps() const {
  for (std::size_t j = 0; j + 1 < points_.size(); ++j) {
    if (points_[j].a1 == points_[j + 1].a1 || points_[j].a2 == points_[j + 1].a2) {
      return true;
    }
  }
  return false;
}

Hyperbolic StrongPartition::telescoped_lengths() const {
  ExactSum s1, s2;
  for (std::size_t j = 0; j + 1 < points_.size(); ++j) {
    s1.add_difference(points_[j + 1].a1, points_[j].a1);
    s2.add_difference(points_[j + 1].a2, points_[j].a2);
  }
  return {s1.result(), s2.result()};
}

std::pair<std::vector<double>, std::vector<double>> StrongPartition::project() const {
  std::vector<double> p1, p2;
  p1.reserve(points_.size());
  p2.reserve(points_.size());
  for (const Hyperbolic& p : points_) {
    if (p1.empty() || p1.back() != p.a1) p1.push_back(p.a1);
    if (p2.empty() || p2.back() != p.a2) p2.push_back(p.a2);
  }
  return {std::move(p1), std::move(p2)};
}

namespace {

double max_gap(const std::vector<double>& points) {
  double widest = 0.0;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    widest = std::max(widest, points[j + 1] - points[j]);
  }
  return widest;
}

}  // namespace

Hyperbolic StrongPartition::diameter() const {
  const auto [p1, p2] = project();
  return {max_gap(p1), max_gap(p2)};
}

// ---- WeakPartition -------------------------------------------------------

WeakPartition WeakPartition::validate(std::vector<HInterval> subintervals,
                                      const HInterval& interval,
                                      double tolerance) {
  if (subintervals.empty()) {
    throw EndpointMissingError("a weak partition needs at least one sub-interval");
  }
  ExactSum s1, s2;
  for (const HInterval& sub : subintervals) {
    const Hyperbolic len = sub.length();
    s1.add(len.a1);
    s2.add(len.a2);
  }
  const Hyperbolic actual{s1.result(), s2.result()};
  const Hyperbolic expected = interval.length();
  const bool ok = tolerance > 0.0
                      ? std::fabs(actual.a1 - expected.a1) <= tolerance &&
                            std::fabs(actual.a2 - expected.a2) <= tolerance
                      : actual == expected;
  if (!ok) {
    throw LengthMismatchError(actual, expected);
  }
  return WeakPartition(std::move(subintervals), interval);
}

Hyperbolic WeakPartition::length_sum() const {
  ExactSum s1, s2;
  for (const HInterval& sub : subintervals_) {
    const Hyperbolic len = sub.length();
    s1.add(len.a1);
    s2.add(len.a2);
  }
  return {s1.result(), s2.result()};
}

// ---- RegularPartition ----------------------------------------------------

namespace {

bool interiors_intersect(const HInterval& a, const HInterval& b) {
  // Strict inequalities: degenerate rectangles have empty interior.
  return a.lo().a1 < b.hi().a1 && b.lo().a1 < a.hi().a1 &&
         a.lo().a2 < b.hi().a2 && b.lo().a2 < a.hi().a2;
}

}  // namespace

RegularPartition RegularPartition::validate(std::vector<HInterval> cells,
                                            const HInterval& interval) {
  if (cells.empty()) {
    throw EndpointMissingError("a regular partition needs at least one cell");
  }
  ExactSum areas;
  for (const HInterval& cell : cells) {
    areas.add(cell.euclidean_area());
  }
  const double actual = areas.result();
  const double expected = interval.euclidean_area();
  const double scale = std::max(std::fabs(expected), 1.0);
  if (std::fabs(actual - expected) > 1e-12 * scale) {
    throw AreaMismatchError(actual, expected);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (interiors_intersect(cells[i], cells[j])) {
        throw OverlappingCellsError(i, j);
      }
    }
  }
  return RegularPartition(std::move(cells), interval);
}

double RegularPartition::area_sum() const {
  ExactSum areas;
  for (const HInterval& cell : cells_) {
    areas.add(cell.euclidean_area());
  }
  return areas.result();
}

// ---- merging real partitions -----------------------------------------------

namespace {

void check_sorted(std::span<const double> points, const char* label) {
  if (points.empty()) {
    throw EndpointMissingError(std::string(label) +
                               " must contain its interval endpoints");
  }
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    if (!(points[j] < points[j + 1])) {
      throw UnsortedInputError(std::string(label) + " is not strictly increasing at index " +
                                   std::to_string(j + 1),
                               j + 1);
    }
  }
}

}  // namespace

StrongPartition merge_real_partitions(std::span<const double> p,
                                      std::span<const double> q, MergeMode mode) {
  check_sorted(p, "P");
  check_sorted(q, "Q");

  const Hyperbolic lo{p.front(), q.front()};
  const Hyperbolic hi{p.back(), q.back()};
  std::vector<Hyperbolic> points;

  switch (mode) {
    case MergeMode::diagonal: {
      const std::size_t count = std::max(p.size(), q.size());
      points.reserve(count);
      for (std::size_t j = 0; j < count; ++j) {
        points.push_back({p[std::min(j, p.size() - 1)], q[std::min(j, q.size() - 1)]});
      }
      break;
    }
    case MergeMode::e1_first: {
      points.reserve(p.size() + q.size() - 1);
      for (double x : p) points.push_back({x, q.front()});
      for (std::size_t j = 1; j < q.size(); ++j) points.push_back({p.back(), q[j]});
      break;
    }
    case MergeMode::e2_first: {
      points.reserve(p.size() + q.size() - 1);
      for (double y : q) points.push_back({p.front(), y});
      for (std::size_t j = 1; j < p.size(); ++j) points.push_back({p[j], q.back()});
      break;
    }
  }

  return StrongPartition::validate(std::move(points), HInterval(lo, hi));
}

StrongPartition uniform_partition(const HInterval& interval, int n) {
  if (n < 1) {
    throw InputError("bad-subdivision", "subdivision count must be >= 1");
  }
  if (interval.fully_degenerate()) {
    if (n > 1) {
      throw DegenerateIntervalError(
          "a fully degenerate interval admits only the single-point partition");
    }
    return StrongPartition::validate({interval.lo()}, interval);
  }
  const Hyperbolic lo = interval.lo();
  const Hyperbolic len = interval.length();
  std::vector<Hyperbolic> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  points.push_back(lo);
  for (int j = 1; j < n; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(n);
    points.push_back({lo.a1 + f * len.a1, lo.a2 + f * len.a2});
  }
  points.push_back(interval.hi());
  return StrongPartition::validate(std::move(points), interval);
}

StrongPartition refine_midpoints(const StrongPartition& partition) {
  const auto points = partition.points();
  std::vector<Hyperbolic> refined;
  refined.reserve(points.size() * 2);
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    const Hyperbolic a = points[j];
    const Hyperbolic b = points[j + 1];
    refined.push_back(a);
    const Hyperbolic mid{(a.a1 + b.a1) / 2.0, (a.a2 + b.a2) / 2.0};
    if (!(mid == a) && !(mid == b)) refined.push_back(mid);
  }
  refined.push_back(points.back());
  return StrongPartition::validate(std::move(refined), partition.interval());
}

}  // namespace hyperbolica
