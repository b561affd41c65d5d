#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hyperbolica/hyperbolic.hpp"
#include "helpers.hpp"

using namespace hyperbolica;
using testutil::within_ulps;

TEST_CASE("canonical and idempotent representations") {
  CHECK(Hyperbolic::from_canonical(1.0, 0.0) == Hyperbolic{1.0, 1.0});
  CHECK(Hyperbolic::from_canonical(0.0, 1.0) == Hyperbolic{1.0, -1.0});
  CHECK(Hyperbolic::from_canonical(2.0, 1.0) == Hyperbolic{3.0, 1.0});

  SUBCASE("round trip is exact on dyadic rationals") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 500; ++i) {
      const Hyperbolic x{testutil::random_dyadic(rng), testutil::random_dyadic(rng)};
      const auto c = x.to_canonical();
      CHECK(Hyperbolic::from_canonical(c.t, c.s) == x);
    }
  }

  SUBCASE("round trip on arbitrary doubles stays within rounding") {
    // The error budget is the rounding of the two canonical intermediates,
    // which scales with max(|a1|, |a2|), not with ulps of each component.
    std::mt19937_64 rng(7009);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 500; ++i) {
      const Hyperbolic x{value(rng), value(rng)};
      const auto c = x.to_canonical();
      const Hyperbolic back = Hyperbolic::from_canonical(c.t, c.s);
      const double budget = 4.0 * eps * std::max(std::fabs(x.a1), std::fabs(x.a2));
      CHECK(std::fabs(back.a1 - x.a1) <= budget);
      CHECK(std::fabs(back.a2 - x.a2) <= budget);
    }
  }

  SUBCASE("decomposition x = t*1~ + s*j on dyadic rationals") {
    std::mt19937_64 rng(7002);
    for (int i = 0; i < 500; ++i) {
      const Hyperbolic x{testutil::random_dyadic(rng), testutil::random_dyadic(rng)};
      const auto c = x.to_canonical();
      CHECK(c.t * Hyperbolic::one() + c.s * Hyperbolic::unit_j() == x);
    }
  }
}

TEST_CASE("ring operations") {
  CHECK(Hyperbolic::unit_e1() * Hyperbolic::unit_e2() == Hyperbolic::zero());
  CHECK(Hyperbolic::unit_j() * Hyperbolic::unit_j() == Hyperbolic::one());

  // Same-sign samples keep the law checks free of catastrophic cancellation,
  // which no fixed ulp bound would survive.
  std::mt19937_64 rng(7003);
  std::uniform_real_distribution<double> value(0.125, 8.0);
  for (int i = 0; i < 500; ++i) {
    const Hyperbolic x{value(rng), value(rng)};
    const Hyperbolic y{value(rng), value(rng)};
    const Hyperbolic z{value(rng), value(rng)};
    CHECK(x * Hyperbolic::one() == x);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    const Hyperbolic assoc_l = (x * y) * z;
    const Hyperbolic assoc_r = x * (y * z);
    CHECK(within_ulps(assoc_l.a1, assoc_r.a1, 4));
    CHECK(within_ulps(assoc_l.a2, assoc_r.a2, 4));
    const Hyperbolic dist_l = x * (y + z);
    const Hyperbolic dist_r = x * y + x * z;
    CHECK(within_ulps(dist_l.a1, dist_r.a1, 4));
    CHECK(within_ulps(dist_l.a2, dist_r.a2, 4));
  }

  SUBCASE("ring laws exact on dyadic inputs") {
    for (int i = 0; i < 500; ++i) {
      const Hyperbolic x{testutil::random_dyadic(rng, 64, 5),
                         testutil::random_dyadic(rng, 64, 5)};
      const Hyperbolic y{testutil::random_dyadic(rng, 64, 5),
                         testutil::random_dyadic(rng, 64, 5)};
      const Hyperbolic z{testutil::random_dyadic(rng, 64, 5),
                         testutil::random_dyadic(rng, 64, 5)};
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(Hyperbolic{2.0, 4.0}.inverse() == Hyperbolic{0.5, 0.25});
  CHECK(Hyperbolic::one().inverse() == Hyperbolic::one());
  CHECK_THROWS_AS(Hyperbolic::unit_e1().inverse(), ZeroDivisorError);
  CHECK_THROWS_AS(Hyperbolic::unit_e2().inverse(), ZeroDivisorError);
  CHECK_THROWS_AS(Hyperbolic::zero().inverse(), ZeroValueError);

  std::mt19937_64 rng(7004);
  std::uniform_real_distribution<double> value(0.5, 8.0);
  for (int i = 0; i < 200; ++i) {
    const Hyperbolic x{value(rng), value(rng)};
    const Hyperbolic product = x * x.inverse();
    CHECK(within_ulps(product.a1, 1.0, 4));
    CHECK(within_ulps(product.a2, 1.0, 4));
  }

  SUBCASE("division goes through the inverse") {
    const Hyperbolic x{6.0, 8.0};
    const Hyperbolic y{2.0, 4.0};
    CHECK(x / y == Hyperbolic{3.0, 2.0});
    CHECK_THROWS_AS(x / Hyperbolic::unit_e1(), ZeroDivisorError);
  }
}

TEST_CASE("partial order") {
  const OrderRelation strict = compare({0.0, 0.0}, {1.0, 1.0});
  CHECK(strict.order == Order::less);
  CHECK(strict.strict);

  const OrderRelation mixed = compare({1.0, 0.0}, {0.0, 1.0});
  CHECK(mixed.order == Order::incomparable);
  CHECK_FALSE(mixed.comparable());

  // Equality in one component is kept in the partial order but dropped from
  // the strict one.
  const OrderRelation lax = compare({1.0, 1.0}, {1.0, 2.0});
  CHECK(lax.order == Order::less);
  CHECK_FALSE(lax.strict);

  CHECK(compare({2.0, 2.0}, {2.0, 2.0}).order == Order::equal);

  SUBCASE("antisymmetry and transitivity") {
    std::mt19937_64 rng(7005);
    std::uniform_real_distribution<double> value(-4.0, 4.0);
    std::uniform_real_distribution<double> bump(0.0, 2.0);
    for (int i = 0; i < 500; ++i) {
      const Hyperbolic a{value(rng), value(rng)};
      const Hyperbolic b = a + Hyperbolic{bump(rng), bump(rng)};
      const Hyperbolic c = b + Hyperbolic{bump(rng), bump(rng)};
      CHECK(compare(a, a).order == Order::equal);
      const OrderRelation ab = compare(a, b);
      const OrderRelation ba = compare(b, a);
      if (ab.order == Order::less) {
        CHECK(ba.order == Order::greater);
        CHECK(ab.strict == ba.strict);
      }
      CHECK(preceq(a, b));
      CHECK(preceq(b, c));
      CHECK(preceq(a, c));
    }
  }
}

TEST_CASE("positive cone membership") {
  CHECK(Hyperbolic::one().strictly_positive());
  CHECK_FALSE(Hyperbolic::unit_e1().strictly_positive());
  CHECK(Hyperbolic::unit_e1().nonnegative());
  CHECK_FALSE(Hyperbolic::unit_j().nonnegative());
  CHECK(Hyperbolic::zero().nonnegative());
  CHECK_FALSE(Hyperbolic::zero().strictly_positive());
}

TEST_CASE("metric") {
  CHECK(metric({3.0, 1.0}, {1.0, 2.0}) == Hyperbolic{2.0, 1.0});

  std::mt19937_64 rng(7006);
  std::uniform_real_distribution<double> value(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    const Hyperbolic x{value(rng), value(rng)};
    const Hyperbolic y{value(rng), value(rng)};
    const Hyperbolic z{value(rng), value(rng)};
    CHECK(metric(x, x) == Hyperbolic::zero());
    CHECK(metric(x, y) == metric(y, x));
    CHECK(metric(x, y).a1 >= 0.0);
    CHECK(metric(x, y).a2 >= 0.0);
    CHECK((metric(x, y) == Hyperbolic::zero()) == (x == y));
    // Triangle inequality in the partial order, with a whisker of slack for
    // rounding of the right-hand sum.
    const Hyperbolic direct = metric(x, y);
    const Hyperbolic via = metric(x, z) + metric(z, y);
    CHECK(direct.a1 <= via.a1 + 1e-14);
    CHECK(direct.a2 <= via.a2 + 1e-14);
  }
}

TEST_CASE("supremum of finite sets") {
  const std::vector<Hyperbolic> units{Hyperbolic::unit_e1(), Hyperbolic::unit_e2()};
  CHECK(sup_set(units) == Hyperbolic::one());

  const std::vector<Hyperbolic> single{Hyperbolic{2.5, -1.0}};
  CHECK(sup_set(single) == Hyperbolic{2.5, -1.0});

  const std::vector<Hyperbolic> triple{{1.0, 5.0}, {3.0, 2.0}, {2.0, 2.0}};
  Hyperbolic expected{triple[0]};
  for (const Hyperbolic& v : triple) {
    expected = {std::max(expected.a1, v.a1), std::max(expected.a2, v.a2)};
  }
  CHECK(sup_set(triple) == expected);
  CHECK(sup_set(triple) == Hyperbolic{3.0, 5.0});

  CHECK_THROWS_AS(sup_set({}), EmptySetError);

  SUBCASE("least upper bound") {
    std::mt19937_64 rng(7007);
    std::uniform_real_distribution<double> value(-8.0, 8.0);
    std::uniform_real_distribution<double> bump(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      std::vector<Hyperbolic> values;
      const int n = 1 + static_cast<int>(rng() % 9);
      for (int j = 0; j < n; ++j) values.push_back({value(rng), value(rng)});
      const Hyperbolic s = sup_set(values);
      for (const Hyperbolic& v : values) CHECK(preceq(v, s));
      // Any upper bound dominates the supremum, and nothing strictly below
      // it in either component is still an upper bound.
      const Hyperbolic above = s + Hyperbolic{bump(rng), bump(rng)};
      CHECK(preceq(s, above));
      const Hyperbolic shaved1{s.a1 - 0.5, s.a2};
      bool still_upper = true;
      for (const Hyperbolic& v : values) still_upper = still_upper && preceq(v, shaved1);
      CHECK_FALSE(still_upper);
    }
  }
}

TEST_CASE("textual forms") {
  const Hyperbolic x{0.5, -0.25};
  CHECK(parse_hyperbolic(to_string_idempotent(x)) == x);
  CHECK(parse_hyperbolic(to_string_canonical(x)) == x);
  CHECK(parse_hyperbolic("3") == Hyperbolic::embed(3.0));
  CHECK(parse_hyperbolic("2*e1") == Hyperbolic{2.0, 0.0});
  CHECK(parse_hyperbolic("1 + 0.5*j") == Hyperbolic::from_canonical(1.0, 0.5));
  CHECK(parse_hyperbolic("j") == Hyperbolic::unit_j());
  CHECK(parse_hyperbolic("-1*e2") == Hyperbolic{0.0, -1.0});
  CHECK_THROWS_AS(parse_hyperbolic(""), SyntaxError);
  CHECK_THROWS_AS(parse_hyperbolic("2*"), SyntaxError);
  CHECK_THROWS_AS(parse_hyperbolic("1 1"), SyntaxError);

  std::mt19937_64 rng(7008);
  for (int i = 0; i < 200; ++i) {
    const Hyperbolic v{testutil::random_dyadic(rng), testutil::random_dyadic(rng)};
    CHECK(parse_hyperbolic(to_string_idempotent(v)) == v);
    CHECK(parse_hyperbolic(to_string_canonical(v)) == v);
  }
}
