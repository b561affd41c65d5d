#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include "hyperbolica/hyperbolic.hpp"
#include "hyperbolica/partition.hpp"

namespace testutil {

using hyperbolica::HInterval;
using hyperbolica::Hyperbolic;
using hyperbolica::StrongPartition;

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool close(Hyperbolic a, Hyperbolic b, double tol) {
  return close(a.a1, b.a1, tol) && close(a.a2, b.a2, tol);
}

inline std::int64_t bits_of(double v) {
  std::int64_t bits = 0;
  std::memcpy(&bits, &v, sizeof(bits));
  return bits >= 0 ? bits : std::int64_t(0x8000000000000000ull) - bits;
}

inline std::int64_t ulp_distance(double a, double b) {
  return std::llabs(bits_of(a) - bits_of(b));
}

inline bool within_ulps(double a, double b, std::int64_t ulps) {
  if (a == b) return true;
  return ulp_distance(a, b) <= ulps;
}

// Dyadic rational m / 2^k; sums and differences of these stay exact in
// double arithmetic at the scales used here.
inline double random_dyadic(std::mt19937_64& rng, int max_abs_num = 4096,
                            int max_exp = 10) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> exp(0, max_exp);
  return static_cast<double>(num(rng)) / static_cast<double>(1 << exp(rng));
}

// Random staircase chain with nonnegative dyadic increments (never both
// zero), at most `max_points` points.
inline StrongPartition random_dyadic_staircase(std::mt19937_64& rng,
                                               int max_points = 64) {
  std::uniform_int_distribution<int> count(2, max_points);
  std::uniform_int_distribution<int> step(0, 64);
  const int n = count(rng);
  Hyperbolic current{random_dyadic(rng), random_dyadic(rng)};
  std::vector<Hyperbolic> points{current};
  for (int j = 1; j < n; ++j) {
    double d1 = step(rng) / 1024.0;
    double d2 = step(rng) / 1024.0;
    while (d1 == 0.0 && d2 == 0.0) {
      d1 = step(rng) / 1024.0;
      d2 = step(rng) / 1024.0;
    }
    current = current + Hyperbolic{d1, d2};
    points.push_back(current);
  }
  const HInterval interval(points.front(), points.back());
  return StrongPartition::validate(std::move(points), interval);
}

// Sorted, strictly increasing reals in [0, 1] including both endpoints.
inline std::vector<double> random_sorted_reals(std::mt19937_64& rng,
                                               int max_points = 12) {
  std::uniform_int_distribution<int> count(2, max_points);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::vector<double> points{0.0, 1.0};
  const int extra = count(rng) - 2;
  for (int i = 0; i < extra; ++i) points.push_back(value(rng));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace testutil
