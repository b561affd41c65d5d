#include "hyperbolica/variation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "hyperbolica/summation.hpp"

namespace hyperbolica {

// ---- variation sums --------------------------------------------------------

namespace {

template <typename Function>
Hyperbolic metric_sum(const Function& f, const StrongPartition& p) {
  ExactSum s1, s2;
  const auto points = p.points();
  if (points.empty()) return Hyperbolic::zero();
  Hyperbolic prev = f(points[0]);
  for (std::size_t j = 1; j < points.size(); ++j) {
    const Hyperbolic curr = f(points[j]);
    s1.add_abs_difference(curr.a1, prev.a1);
    s2.add_abs_difference(curr.a2, prev.a2);
    prev = curr;
  }
  return {s1.result(), s2.result()};
}

}  // namespace

Hyperbolic variation_sum(const NaturalFunction& f, const StrongPartition& p) {
  return metric_sum(f, p);
}

Hyperbolic variation_sum(const GeneralFunction& f, const StrongPartition& p) {
  return metric_sum(f, p);
}

// ---- real total variation -----------------------------------------------

namespace {

std::vector<double> clipped_jumps(const ScalarComponent& f, double lo, double hi,
                                  bool half_open_low) {
  std::vector<double> jumps;
  if (!f.has_expr() || !f.expr().has_heaviside()) return jumps;
  for (double r : f.expr().jump_points(f.var())) {
    const bool above = half_open_low ? r > lo : r >= lo;
    if (above && r <= hi) jumps.push_back(r);
  }
  return jumps;
}

// Derivative roots inside (lo, hi) located by a uniform sign scan plus
// bisection.  Zero-valued runs contribute their first and last sample so
// plateaus split cleanly; inserting redundant points inside a monotone
// stretch never changes the telescoped variation.
std::vector<double> critical_points(const RealExpr& deriv, Var v, double lo,
                                    double hi) {
  constexpr int kSamples = 512;
  const auto value_at = [&](double t) {
    const Bindings b = v == Var::x ? Bindings::only_x(t) : Bindings::only_y(t);
    return deriv.eval(b);
  };

  std::vector<double> grid(kSamples + 1);
  std::vector<double> samples(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    grid[i] = i == kSamples ? hi : lo + (hi - lo) * i / kSamples;
    samples[i] = value_at(grid[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i <= kSamples; ++i) {
    if (samples[i] == 0.0) {
      const bool run_start = i == 0 || samples[i - 1] != 0.0;
      const bool run_end = i == kSamples || samples[i + 1] != 0.0;
      if (run_start || run_end) roots.push_back(grid[i]);
      continue;
    }
    if (i < kSamples && samples[i + 1] != 0.0 &&
        std::signbit(samples[i]) != std::signbit(samples[i + 1])) {
      double a = grid[i];
      double b = grid[i + 1];
      double fa = samples[i];
      for (int iter = 0; iter < 80 && b - a > (hi - lo) * 1e-16; ++iter) {
        const double mid = a + (b - a) / 2.0;
        if (mid <= a || mid >= b) break;
        const double fm = value_at(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(a + (b - a) / 2.0);
    }
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::erase_if(roots, [&](double r) { return r <= lo || r >= hi; });
  return roots;
}

// Exact total variation for expression components that decompose into
// monotone pieces between Heaviside jumps.  The value telescopes over the
// monotone breakpoints; jump magnitudes use exact one-sided evaluation.
std::optional<RealVariationResult> certified_variation(const ScalarComponent& f,
                                                       double a, double b) {
  if (!f.has_expr()) return std::nullopt;
  try {
    const RealExpr& expr = f.expr();
    const Var v = f.var();
    const RealExpr deriv = derivative_between_jumps(expr, v);  // rejects abs

    std::vector<double> boundaries = clipped_jumps(f, a, b, /*half_open_low=*/true);
    const std::size_t jump_count = boundaries.size();
    boundaries.insert(boundaries.begin(), a);
    if (boundaries.back() != b) boundaries.push_back(b);

    ExactSum total;
    int breakpoints = 1;
    for (std::size_t s = 0; s + 1 < boundaries.size(); ++s) {
      const double lo = boundaries[s];
      const double hi = boundaries[s + 1];
      // After the inserts the jump roots occupy positions 1..jump_count.
      const bool hi_is_jump = s + 1 <= jump_count;
      std::vector<double> pieces = critical_points(deriv, v, lo, hi);
      pieces.insert(pieces.begin(), lo);
      pieces.push_back(hi);
      for (std::size_t j = 0; j + 1 < pieces.size(); ++j) {
        const bool at_hi = j + 2 == pieces.size();
        const double left_value = f(pieces[j]);
        const double right_value =
            at_hi && hi_is_jump ? f(hi, JumpSide::left) : f(pieces[j + 1]);
        total.add_abs_difference(right_value, left_value);
        ++breakpoints;
      }
      if (hi_is_jump) {
        total.add_abs_difference(f(hi), f(hi, JumpSide::left));
      }
    }
    return RealVariationResult{total.result(), breakpoints, true, true};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

RealVariationResult real_total_variation(const ScalarComponent& f, double a,
                                         double b, double tol, int max_depth) {
  if (!(a <= b)) {
    throw InputError("bad-interval", "total variation needs a <= b");
  }
  if (a == b) {
    return {0.0, 1, true, true};
  }

  if (auto certified = certified_variation(f, a, b)) {
    return *certified;
  }

  // Refinement lower bound: start from the jumps (when extractable) and
  // bisect until the variation sum stops growing.
  std::vector<double> points;
  try {
    points = clipped_jumps(f, a, b, /*half_open_low=*/true);
  } catch (const NonAffineJumpError&) {
    // Jumps exist but cannot be located; bisection still yields a valid
    // lower bound that approaches them from both sides.
  }
  std::erase_if(points, [&](double r) { return r >= b; });
  points.insert(points.begin(), a);
  points.push_back(b);

  const auto sum_over = [&](const std::vector<double>& grid) {
    ExactSum s;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      s.add_abs_difference(f(grid[j + 1]), f(grid[j]));
    }
    return s.result();
  };

  // A single flat level can be a plateau (new grid points landing on a
  // monotone stretch while extrema hide between them), so convergence needs
  // two consecutive sub-tol increases.
  double previous = sum_over(points);
  int stable_levels = 0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<double> refined;
    refined.reserve(points.size() * 2);
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
      refined.push_back(points[j]);
      const double mid = points[j] + (points[j + 1] - points[j]) / 2.0;
      if (mid > points[j] && mid < points[j + 1]) refined.push_back(mid);
    }
    refined.push_back(points.back());
    points = std::move(refined);

    const double value = sum_over(points);
    stable_levels = value - previous < tol ? stable_levels + 1 : 0;
    previous = value;
    if (stable_levels >= 2) {
      return {value, static_cast<int>(points.size()), true, false};
    }
  }
  return {previous, static_cast<int>(points.size()), false, false};
}

VariationEstimate total_variation(const NaturalFunction& f,
                                  const HInterval& interval, double tol,
                                  int max_depth) {
  if (!(tol > 0.0)) {
    throw InputError("bad-tolerance", "tolerance must be positive");
  }
  const auto [p1, p2] = interval.projections();
  const RealVariationResult r1 =
      real_total_variation(f.f1(), p1.lo, p1.hi, tol, max_depth);
  const RealVariationResult r2 =
      real_total_variation(f.f2(), p2.lo, p2.hi, tol, max_depth);
  VariationEstimate estimate;
  estimate.value = {r1.value, r2.value};
  estimate.partitions_used = std::max(r1.partitions_used, r2.partitions_used);
  estimate.converged = r1.converged && r2.converged;
  estimate.lower_bound_only = !(r1.certified && r2.certified);
  return estimate;
}

// ---- brute-force sum-set ---------------------------------------------------

namespace {

std::vector<double> lattice_values(double lo, double hi, int count) {
  std::vector<double> values;
  values.reserve(count);
  for (int i = 0; i < count; ++i) {
    values.push_back(i == 0 ? lo
                    : i == count - 1
                        ? hi
                        : lo + (hi - lo) * i / (count - 1));
  }
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

template <typename Function>
HyperbolicSet enumerate_chain_sums(const Function& f, const HInterval& interval,
                                   int m, int n) {
  if (m > 6 || n > 6) {
    throw GridTooLargeError("lattice enumeration is exponential; limit is 6x6");
  }
  if (m < 2 || n < 2) {
    throw InputError("bad-grid", "lattice needs at least 2 points per axis");
  }
  const auto [p1, p2] = interval.projections();
  const std::vector<double> xs = lattice_values(p1.lo, p1.hi, m);
  const std::vector<double> ys = lattice_values(p2.lo, p2.hi, n);
  const int cols = static_cast<int>(xs.size());
  const int rows = static_cast<int>(ys.size());

  std::vector<Hyperbolic> values(static_cast<std::size_t>(cols) * rows);
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) {
      values[static_cast<std::size_t>(i) * rows + j] = f(Hyperbolic{xs[i], ys[j]});
    }
  }
  const auto value_at = [&](int i, int j) -> const Hyperbolic& {
    return values[static_cast<std::size_t>(i) * rows + j];
  };

  HyperbolicSet sums;

  // Depth-first walk over all monotone chains from corner to corner; steps
  // may advance either index or both.  Partial sums travel by value so each
  // leaf rounds its own exact total.
  const auto walk = [&](auto&& self, int i, int j, ExactSum s1, ExactSum s2) -> void {
    if (i == cols - 1 && j == rows - 1) {
      sums.insert(Hyperbolic{s1.result(), s2.result()});
      return;
    }
    for (int ni = i; ni < cols; ++ni) {
      for (int nj = j; nj < rows; ++nj) {
        if (ni == i && nj == j) continue;
        ExactSum n1 = s1;
        ExactSum n2 = s2;
        n1.add_abs_difference(value_at(ni, nj).a1, value_at(i, j).a1);
        n2.add_abs_difference(value_at(ni, nj).a2, value_at(i, j).a2);
        self(self, ni, nj, std::move(n1), std::move(n2));
      }
    }
  };
  walk(walk, 0, 0, ExactSum(), ExactSum());
  return sums;
}

}  // namespace

HyperbolicSet variation_sum_set_bruteforce(const NaturalFunction& f,
                                           const HInterval& interval, int m,
                                           int n) {
  return enumerate_chain_sums(f, interval, m, n);
}

HyperbolicSet variation_sum_set_bruteforce(const GeneralFunction& f,
                                           const HInterval& interval, int m,
                                           int n) {
  return enumerate_chain_sums(f, interval, m, n);
}

// ---- discontinuity lines ---------------------------------------------------

DiscontinuityLines discontinuity_lines(const NaturalFunction& f,
                                       const HInterval& interval) {
  if (!f.f1().has_expr() || !f.f2().has_expr()) {
    throw InvalidFunctionError(
        "discontinuity lines need expression components; callbacks carry no "
        "jump information");
  }
  const auto [p1, p2] = interval.projections();
  DiscontinuityLines lines;
  lines.vertical = clipped_jumps(f.f1(), p1.lo, p1.hi, /*half_open_low=*/false);
  lines.horizontal = clipped_jumps(f.f2(), p2.lo, p2.hi, /*half_open_low=*/false);
  return lines;
}

}  // namespace hyperbolica
