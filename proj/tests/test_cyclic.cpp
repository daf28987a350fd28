#include "doctest.h"

#include <algorithm>

#include "circmin/cyclic.hpp"

using namespace circmin;

TEST_CASE("circular distance") {
  GroundSet g(12);
  CHECK(circ_dist(12, 5, g) == 5);
  CHECK(circ_dist(7, 7, g) == 0);
  CHECK(circ_dist(9, 2, g) == 5);
  CHECK_THROWS_AS(circ_dist(0, 5, g), DomainError);
  CHECK_THROWS_AS(circ_dist(1, 13, g), DomainError);
}

TEST_CASE("interval members and closures") {
  GroundSet g(12);
  CHECK(interval_members({12, 2}, g) == std::vector<int>{12, 1, 2});
  CHECK(interval_members({12, 5}, g, Closure::HalfOpenLeft) ==
        std::vector<int>{1, 2, 3, 4, 5});
  auto all = interval_members({3, 2}, g);
  CHECK(all.size() == 12);
  CHECK(all.front() == 3);
  CHECK(all.back() == 2);
}

TEST_CASE("ground set needs at least three elements") {
  CHECK_THROWS_AS(GroundSet(2), DomainError);
}

TEST_CASE("distance antisymmetry and interval sizes, exhaustive") {
  GroundSet g(7);
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      int fwd = circ_dist(a, b, g);
      int bwd = circ_dist(b, a, g);
      CHECK((fwd + bwd == 0 || fwd + bwd == 7));

      CircularInterval iv{a, b};
      auto closed = interval_members(iv, g);
      CHECK(static_cast<int>(closed.size()) == fwd + 1);
      CHECK(interval_members(iv, g, Closure::HalfOpenLeft).size() ==
            closed.size() - 1);
      CHECK(interval_members(iv, g, Closure::HalfOpenRight).size() ==
            closed.size() - 1);
      auto open = interval_members(iv, g, Closure::Open);
      CHECK(open.size() == (closed.size() >= 2 ? closed.size() - 2 : 0));
    }
  }
}

TEST_CASE("half-open membership matches distances, exhaustive") {
  GroundSet g(9);
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= 9; ++b) {
      auto half = interval_members({a, b}, g, Closure::HalfOpenLeft);
      for (int j = 1; j <= 9; ++j) {
        bool member =
            std::find(half.begin(), half.end(), j) != half.end();
        bool expected =
            circ_dist(a, j, g) >= 1 && circ_dist(a, j, g) <= circ_dist(a, b, g);
        CHECK(member == expected);
      }
    }
  }
}

TEST_CASE("interval containment") {
  GroundSet g(12);
  CHECK(interval_contains_interval({1, 5}, {2, 4}, g));
  CHECK(!interval_contains_interval({2, 4}, {1, 5}, g));
  CHECK(interval_contains_interval({11, 3}, {12, 2}, g));
  CHECK(!interval_contains_interval({11, 3}, {12, 4}, g));
  // A full interval contains everything.
  CHECK(interval_contains_interval({3, 2}, {8, 1}, g));
}
