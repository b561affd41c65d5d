#pragma once

#include <span>
#include <string>

#include "hyperbolica/function.hpp"
#include "hyperbolica/partition.hpp"

namespace hyperbolica {

// Placement of the tag gamma_j inside the step [rho_j, rho_{j+1}]_k; the
// midpoint is taken componentwise and always lies in the step by the order
// structure.
enum class TagRule { left, right, midpoint };

// The defining sum uses the hyperbolic absolute value of the integrator
// increment, |G(rho_{j+1}) - G(rho_j)|_k ("paper_abs").  The classical
// signed increment is provided alongside; the two coincide whenever the
// integrator components are nondecreasing along the partition.
enum class SumMode { paper_abs, signed_increment };

struct IntegralResult {
  Hyperbolic value;
  // Componentwise |last - previous| of the refinement sums.
  Hyperbolic error_estimate;
  // Componentwise |S_left - S_right| on the final grid; stays bounded away
  // from zero exactly when no tag-independent limit exists.
  Hyperbolic tag_gap;
  int refinements = 0;
  bool converged = false;
  SumMode mode = SumMode::paper_abs;
};

Hyperbolic rs_sum(const NaturalFunction& f, const NaturalFunction& g,
                  const StrongPartition& p, TagRule tags, SumMode mode);

// Refines uniform diagonal partitions (n = 8, 16, 32, ..., capped at 2^20
// points) with all component jump points force-inserted, stopping when the
// successive sums differ by less than tol in both components and the
// left/right tag sums either agree within 10*tol or keep shrinking.  A
// result with converged=false signals possible non-integrability, e.g. a
// shared discontinuity of F and G.
IntegralResult rs_integral(const NaturalFunction& f, const NaturalFunction& g,
                           const HInterval& interval, double tol,
                           TagRule tags = TagRule::midpoint,
                           SumMode mode = SumMode::paper_abs,
                           int max_refinements = 22);

// Integral against the identity: the hyperbolic Riemann integral
// (int F1 dx)*e1 + (int F2 dy)*e2.  Signed mode; for the identity
// integrator on an interval the two modes coincide.
IntegralResult riemann_integral(const NaturalFunction& f, const HInterval& interval,
                                double tol, TagRule tags = TagRule::midpoint,
                                int max_refinements = 22);

// Substitution identity: integrating F against G must agree with the
// Riemann integral of F*G' when G has differentiable components.
struct SubstitutionReport {
  IntegralResult lhs;  // integral of F against G
  IntegralResult rhs;  // Riemann integral of F*G'
  Hyperbolic difference;
  bool pass = false;
  // In paper_abs mode the identity is only claimed for componentwise
  // nondecreasing G; when that certification fails the report says so here.
  std::string note;
};

SubstitutionReport check_substitution(const NaturalFunction& f,
                                      const NaturalFunction& g,
                                      const HInterval& interval, double tol,
                                      TagRule tags = TagRule::midpoint,
                                      SumMode mode = SumMode::signed_increment,
                                      int max_refinements = 22);

// Scalar engine driving one idempotent component; exposed so the hyperbolic
// results can be checked against direct per-projection runs.
struct RealIntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double tag_gap = 0.0;
  int refinements = 0;
  bool converged = false;
};

RealIntegralResult real_rs_integral(const ScalarComponent& f,
                                    const ScalarComponent& g, double a, double b,
                                    double tol, TagRule tags, SumMode mode,
                                    int max_refinements,
                                    std::span<const double> forced_points);

}  // namespace hyperbolica
