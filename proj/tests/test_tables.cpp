#include <doctest.h>

#include "filling/tables.hpp"

using namespace filling;

TEST_CASE("closed-form values")
{
  CHECK(min_intersection(2, 3) == 5);
  CHECK(min_intersection(2, 0) == 4);
  CHECK(min_intersection(2, 2) == 4);
  CHECK(min_intersection(2, 4) == 6);
  CHECK(min_intersection(0, 4) == 2);
  CHECK(min_intersection(0, 5) == 4);
  CHECK(min_intersection(0, 6) == 4);
  CHECK(min_intersection(1, 0) == 1);
  CHECK(min_intersection(3, 0) == 5);
  CHECK(min_intersection(3, 2) == 6);
  CHECK(min_intersection(1, 1) == 1);
}

TEST_CASE("domain")
{
  for (int p = 0; p <= 3; ++p)
    CHECK_THROWS_AS(min_intersection(0, p), NoFillingPair);
  for (int g = 1; g <= 6; ++g) {
    for (int p = 0; p <= 12; ++p)
      CHECK_NOTHROW(min_intersection(g, p));
  }
  for (int p = 4; p <= 12; ++p)
    CHECK_NOTHROW(min_intersection(0, p));
  CHECK_THROWS_AS(min_intersection(-1, 0), std::invalid_argument);
}

TEST_CASE("double-bigon step on genus two")
{
  for (int p = 3; p <= 31; p += 2)
    CHECK(min_intersection(2, p + 2) == min_intersection(2, p) + 2);
}

TEST_CASE("cross-validation examples")
{
  auto torus = cross_validate(1, 0, 2);
  CHECK(torus.smallest_nonempty == 1);
  CHECK(torus.consistent());

  auto sphere = cross_validate(0, 4, 3);
  REQUIRE(sphere.rows.size() == 3);
  CHECK_FALSE(sphere.rows[0].nonempty);
  CHECK_FALSE(sphere.rows[0].feasible);
  CHECK(sphere.rows[1].nonempty);
  CHECK_FALSE(sphere.rows[2].nonempty);
  CHECK(sphere.rows[2].feasible);
  CHECK(sphere.smallest_nonempty == 2);
  CHECK(sphere.consistent());

  auto genus2 = cross_validate(2, 3, 5);
  CHECK(genus2.smallest_nonempty == 5);
  CHECK(genus2.rows[3].faces == 2);
  CHECK_FALSE(genus2.rows[3].feasible);
  CHECK(genus2.consistent());
}

TEST_CASE("table agrees with search on small surfaces")
{
  struct Case { int g, p, n_max; };
  for (auto c : {Case{0, 2, 4}, Case{0, 3, 5}, Case{0, 4, 4}, Case{0, 5, 5}, Case{0, 6, 5},
                 Case{1, 0, 3}, Case{1, 1, 3}, Case{1, 2, 3}, Case{1, 3, 4}, Case{1, 4, 5},
                 Case{2, 0, 5}, Case{2, 1, 5}, Case{2, 2, 5}, Case{2, 3, 5}, Case{3, 0, 5}}) {
    CAPTURE(c.g);
    CAPTURE(c.p);
    auto report = cross_validate(c.g, c.p, c.n_max);
    CHECK(report.consistent());
  }
}
