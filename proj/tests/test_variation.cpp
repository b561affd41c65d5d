#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "hyperbolica/summation.hpp"
#include "hyperbolica/variation.hpp"
#include "helpers.hpp"

using namespace hyperbolica;

namespace {

const HInterval kUnit(Hyperbolic::zero(), Hyperbolic::one());

// Independent oracle for the componentwise factorization of sum-sets: the
// variation sums of one real component over all partitions drawn from a
// fixed grid, enumerated by subset mask rather than by chain walking.
std::set<double> real_sum_set(const ScalarComponent& f, const std::vector<double>& grid) {
  std::set<double> sums;
  const std::size_t interior = grid.size() - 2;
  for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
    std::vector<double> points{grid.front()};
    for (std::size_t b = 0; b < interior; ++b) {
      if (mask & (std::size_t{1} << b)) points.push_back(grid[b + 1]);
    }
    points.push_back(grid.back());
    ExactSum sum;
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
      sum.add_abs_difference(f(points[j + 1]), f(points[j]));
    }
    sums.insert(sum.result());
  }
  return sums;
}

std::vector<double> grid_points(double lo, double hi, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = i == 0 ? lo : (i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return grid;
}

}  // namespace

TEST_CASE("variation sums over strong partitions") {
  SUBCASE("identity telescopes to the interval length") {
    const auto id = NaturalFunction::identity();
    std::mt19937_64 rng(7301);
    for (int i = 0; i < 200; ++i) {
      const auto p = testutil::random_dyadic_staircase(rng, 32);
      CHECK(variation_sum(id, p) == p.telescoped_lengths());
      CHECK(variation_sum(id, p) == p.interval().length());
    }
  }

  SUBCASE("constants contribute nothing") {
    const auto c = NaturalFunction::parse("3", "3");
    const auto p = uniform_partition(kUnit, 7);
    CHECK(variation_sum(c, p) == Hyperbolic::zero());
  }

  SUBCASE("single step straddled by one gap") {
    const auto f = NaturalFunction::parse("H(x-1/2)", "0");
    const auto p = uniform_partition(kUnit, 4);
    // F1 along 0, 1/4, 1/2, 3/4, 1 is 0, 0, 1, 1, 1.
    CHECK(variation_sum(f, p) == Hyperbolic{1.0, 0.0});
  }

  SUBCASE("hyperbolic-metric route equals the deduped projection route") {
    const auto f = NaturalFunction::parse("sin(3*x)", "y^2 - y");
    std::mt19937_64 rng(7302);
    for (int i = 0; i < 200; ++i) {
      const auto p = testutil::random_dyadic_staircase(rng, 24);
      const auto [p1, p2] = p.project();
      ExactSum s1, s2;
      for (std::size_t j = 0; j + 1 < p1.size(); ++j) {
        s1.add_abs_difference(f.f1()(p1[j + 1]), f.f1()(p1[j]));
      }
      for (std::size_t j = 0; j + 1 < p2.size(); ++j) {
        s2.add_abs_difference(f.f2()(p2[j + 1]), f.f2()(p2[j]));
      }
      CHECK(variation_sum(f, p) == Hyperbolic{s1.result(), s2.result()});
    }
  }

  SUBCASE("refinement never decreases the sum") {
    const auto f = NaturalFunction::parse("sin(4*x)", "cos(3*y)");
    std::mt19937_64 rng(7303);
    for (int i = 0; i < 200; ++i) {
      const auto p = testutil::random_dyadic_staircase(rng, 16);
      const auto refined = refine_midpoints(p);
      CHECK(preceq(variation_sum(f, p), variation_sum(f, refined)));
    }
  }
}

TEST_CASE("total variation") {
  SUBCASE("identity is exact and certified") {
    const auto estimate = total_variation(NaturalFunction::identity(), kUnit, 1e-9, 20);
    CHECK(estimate.value == Hyperbolic::one());
    CHECK(estimate.converged);
    CHECK_FALSE(estimate.lower_bound_only);
  }

  SUBCASE("squares on [-1~, 1~] split at the critical point") {
    const HInterval box(Hyperbolic::embed(-1.0), Hyperbolic::one());
    const auto estimate =
        total_variation(NaturalFunction::parse("x^2", "y^2"), box, 1e-9, 20);
    CHECK(estimate.value == Hyperbolic::embed(2.0));
    CHECK(estimate.converged);
    CHECK_FALSE(estimate.lower_bound_only);
  }

  SUBCASE("constants have zero variation") {
    const auto estimate = total_variation(NaturalFunction::parse("5", "5"), kUnit, 1e-9, 20);
    CHECK(estimate.value == Hyperbolic::zero());
    CHECK(estimate.converged);
    CHECK_FALSE(estimate.lower_bound_only);
  }

  SUBCASE("monotone components evaluate at the endpoints") {
    const auto f = NaturalFunction::parse("x^3", "-2*y");
    const HInterval box(Hyperbolic::embed(-1.0), Hyperbolic::embed(2.0));
    const auto estimate = total_variation(f, box, 1e-9, 20);
    CHECK(estimate.value == metric(f(box.hi()), f(box.lo())));
    CHECK_FALSE(estimate.lower_bound_only);
  }

  SUBCASE("heaviside jumps contribute their exact magnitude") {
    const auto f = NaturalFunction::parse("H(x-1/2)", "y");
    const auto estimate = total_variation(f, kUnit, 1e-9, 20);
    CHECK(estimate.value == Hyperbolic::one());
    CHECK_FALSE(estimate.lower_bound_only);

    // A jump magnified by a smooth factor: x*H(x-1/2) jumps by 1/2 and then
    // climbs from 1/2 to 1.
    const auto g = NaturalFunction::parse("x*H(x-1/2)", "y");
    const auto ge = total_variation(g, kUnit, 1e-9, 20);
    CHECK(ge.value == Hyperbolic::one());
  }

  SUBCASE("oscillating components need interior extrema") {
    const double pi = std::acos(-1.0);
    const HInterval box(Hyperbolic::zero(), Hyperbolic::embed(3.0 * pi));
    const auto estimate =
        total_variation(NaturalFunction::parse("sin(x)", "y"), box, 1e-9, 20);
    // Extrema at pi/2, 3pi/2, 5pi/2 give 1 + 2 + 2 + 1.
    CHECK(estimate.value.a1 == doctest::Approx(6.0).epsilon(1e-9));
    CHECK_FALSE(estimate.lower_bound_only);
  }

  SUBCASE("abs falls back to a refinement lower bound") {
    const HInterval box(Hyperbolic::embed(-1.0), Hyperbolic::one());
    const auto estimate =
        total_variation(NaturalFunction::parse("abs(x)", "y"), box, 1e-9, 20);
    CHECK(estimate.value.a1 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(estimate.lower_bound_only);
    CHECK(estimate.converged);
  }

  SUBCASE("max depth exhaustion reports a lower bound") {
    const auto estimate =
        total_variation(NaturalFunction::parse("abs(sin(20*x))", "y"), kUnit, 1e-12, 3);
    CHECK_FALSE(estimate.converged);
    CHECK(estimate.lower_bound_only);
    CHECK(estimate.value.a1 > 0.0);
  }

  SUBCASE("components run through the same scalar engine") {
    const auto f = NaturalFunction::parse("sin(2*x)", "y^2");
    const HInterval box(Hyperbolic::zero(), Hyperbolic::embed(2.0));
    const auto estimate = total_variation(f, box, 1e-9, 20);
    const auto r1 = real_total_variation(f.f1(), 0.0, 2.0, 1e-9, 20);
    const auto r2 = real_total_variation(f.f2(), 0.0, 2.0, 1e-9, 20);
    CHECK(estimate.value.a1 == r1.value);
    CHECK(estimate.value.a2 == r2.value);
  }
}

TEST_CASE("brute-force variation sum sets") {
  SUBCASE("2x2 lattice has exactly three corner-to-corner chains") {
    // Hand enumeration: {A,D}, {A,(1,0),D}, {A,(0,1),D}; the two side points
    // are incomparable so no chain holds both.  For a function separating
    // the routes the sums distinguish the diagonal from the detours.
    const GeneralFunction f(RealExpr::parse("(x-y)^2"), RealExpr::parse("0"));
    const auto sums = variation_sum_set_bruteforce(f, kUnit, 2, 2);
    const HyperbolicSet expected{{0.0, 0.0}, {2.0, 0.0}};
    CHECK(sums == expected);
  }

  SUBCASE("natural functions collapse the 2x2 sums to one value") {
    const auto f = NaturalFunction::parse("x^2", "y");
    const auto sums = variation_sum_set_bruteforce(f, kUnit, 2, 2);
    CHECK(sums.size() == 1);
    CHECK(*sums.begin() == Hyperbolic::one());
  }

  SUBCASE("constants give the singleton zero") {
    const auto f = NaturalFunction::parse("2", "2");
    const auto sums = variation_sum_set_bruteforce(f, kUnit, 4, 3);
    CHECK(sums.size() == 1);
    CHECK(*sums.begin() == Hyperbolic::zero());
  }

  SUBCASE("grid limits") {
    const auto f = NaturalFunction::identity();
    CHECK_THROWS_AS(variation_sum_set_bruteforce(f, kUnit, 7, 2), GridTooLargeError);
    CHECK_THROWS_AS(variation_sum_set_bruteforce(f, kUnit, 2, 1), InputError);
  }

  SUBCASE("factorization into componentwise product sets") {
    const std::vector<const char*> f1s{"x", "x^2", "H(x-1/2)", "sin(x)"};
    const std::vector<const char*> f2s{"y", "y^2", "H(y-1/2)", "sin(y)"};
    for (int m = 2; m <= 5; ++m) {
      for (int n = 2; n <= 5; ++n) {
        const auto f = NaturalFunction::parse(f1s[(m + n) % 4], f2s[(m * n) % 4]);
        const auto sums = variation_sum_set_bruteforce(f, kUnit, m, n);
        const std::set<double> s1 = real_sum_set(f.f1(), grid_points(0.0, 1.0, m));
        const std::set<double> s2 = real_sum_set(f.f2(), grid_points(0.0, 1.0, n));
        HyperbolicSet product;
        for (double u : s1) {
          for (double v : s2) product.insert({u, v});
        }
        CHECK(sums == product);
      }
    }
  }
}

TEST_CASE("discontinuity lines") {
  SUBCASE("single vertical jump") {
    const auto f = NaturalFunction::parse("H(x-1/2)", "y");
    const auto lines = discontinuity_lines(f, kUnit);
    CHECK(lines.vertical == std::vector<double>{0.5});
    CHECK(lines.horizontal.empty());
  }

  SUBCASE("smooth functions have none") {
    const auto f = NaturalFunction::parse("x^2", "sin(y)");
    const auto lines = discontinuity_lines(f, kUnit);
    CHECK(lines.vertical.empty());
    CHECK(lines.horizontal.empty());
  }

  SUBCASE("multiple jumps in both components") {
    const auto f = NaturalFunction::parse("H(x-1/3)+H(x-2/3)", "H(y-1/2)");
    const auto lines = discontinuity_lines(f, kUnit);
    CHECK(lines.vertical == std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
    CHECK(lines.horizontal == std::vector<double>{0.5});
  }

  SUBCASE("roots outside the interval are clipped") {
    const auto f = NaturalFunction::parse("H(x-2)", "H(y+1)");
    const auto lines = discontinuity_lines(f, kUnit);
    CHECK(lines.vertical.empty());
    CHECK(lines.horizontal.empty());
  }

  SUBCASE("non-affine jumps propagate") {
    const auto f = NaturalFunction::parse("H(x^2-1)", "y");
    CHECK_THROWS_AS(discontinuity_lines(f, kUnit), NonAffineJumpError);
  }

  SUBCASE("callback components are rejected") {
    const NaturalFunction f(ScalarComponent([](double t) { return t; }, Var::x),
                            ScalarComponent([](double t) { return t; }, Var::y));
    CHECK_THROWS_AS(discontinuity_lines(f, kUnit), InvalidFunctionError);
  }
}
