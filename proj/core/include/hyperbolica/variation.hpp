#pragma once

#include <set>
#include <vector>

#include "hyperbolica/function.hpp"
#include "hyperbolica/partition.hpp"

namespace hyperbolica {

class GridTooLargeError : public InputError {
 public:
  explicit GridTooLargeError(const std::string& what)
      : InputError("grid-too-large", what) {}
};

struct VariationEstimate {
  Hyperbolic value;
  int partitions_used = 0;
  bool converged = false;
  // True when the value is only a refinement lower bound; certified
  // piecewise-monotone components produce the exact total variation instead.
  bool lower_bound_only = true;
};

// Perpendicular discontinuity lines of a natural function of bounded
// variation: vertical x-values come from jumps of F1, horizontal y-values
// from jumps of F2.  Being a finite union of line segments, the set has
// planar Lebesgue measure zero by construction.
struct DiscontinuityLines {
  std::vector<double> vertical;
  std::vector<double> horizontal;
};

// Sum_j |F(rho_{j+1}) - F(rho_j)|_k over the chain, exactly rounded per
// component.
Hyperbolic variation_sum(const NaturalFunction& f, const StrongPartition& p);
Hyperbolic variation_sum(const GeneralFunction& f, const StrongPartition& p);

// Real total variation of one component on [a, b].
struct RealVariationResult {
  double value = 0.0;
  int partitions_used = 0;
  bool converged = false;
  bool certified = false;  // exact piecewise-monotone evaluation succeeded
};

RealVariationResult real_total_variation(const ScalarComponent& f, double a,
                                         double b, double tol, int max_depth);

// Componentwise total variation per the factorization into real total
// variations.  Certified components are exact; otherwise the value is a
// refinement lower bound grown from the jump points until the increase
// drops below tol (converged=false when max_depth is exhausted first).
VariationEstimate total_variation(const NaturalFunction& f, const HInterval& interval,
                                  double tol = 1e-9, int max_depth = 20);

struct HyperbolicLess {
  bool operator()(Hyperbolic a, Hyperbolic b) const {
    if (a.a1 != b.a1) return a.a1 < b.a1;
    return a.a2 < b.a2;
  }
};

using HyperbolicSet = std::set<Hyperbolic, HyperbolicLess>;

// Enumerates every strong partition whose points lie on the m-by-n lattice
// of the interval (all monotone chains through the lattice containing both
// corners) and collects the resulting variation sums.  Exponential in the
// lattice size; m, n <= 6.
HyperbolicSet variation_sum_set_bruteforce(const NaturalFunction& f,
                                           const HInterval& interval, int m, int n);
HyperbolicSet variation_sum_set_bruteforce(const GeneralFunction& f,
                                           const HInterval& interval, int m, int n);

// Jump roots of the component expressions clipped to the projected interval.
DiscontinuityLines discontinuity_lines(const NaturalFunction& f,
                                       const HInterval& interval);

}  // namespace hyperbolica
