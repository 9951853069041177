#include "doctest.h"

#include <random>

#include "pong/context.hpp"
#include "pong/dihedral_group.hpp"
#include "pong/errors.hpp"

using namespace pong;

TEST_CASE("group action on small examples") {
  const DihedralGroup g(3);
  CHECK(g.apply(g.reflection_low(), 2) == -1);
  CHECK(g.apply(g.reflection_high(), 2) == 3);
  CHECK(g.apply(g.translation(1), 2) == 6);
}

TEST_CASE("q1 and q2 examples") {
  const DihedralGroup g(3);
  CHECK(g.q1(0) == 1);
  CHECK(g.q1(6) == 2);
  CHECK(g.q1(3) == 2);
  CHECK(g.q2_doubled(1) == 1);
  CHECK(g.q2_doubled(5) == 3);
  CHECK(g.q2_doubled(7) == 2);
  CHECK_THROWS_AS(g.q2_doubled(4), InvalidArgument);
}

TEST_CASE("q2 agrees with reflecting into [1/2, m-1/2]") {
  for (int m = 2; m <= 6; ++m) {
    const DihedralGroup g(m);
    for (int h = -41; h <= 41; h += 2) {
      int x = h;  // doubled half-integer
      while (x < 1 || x > 2 * m - 1) {
        x = x < 1 ? 2 - x : 2 * (2 * m - 1) - x;
      }
      CHECK(g.q2_doubled(h) == (x + 1) / 2);
    }
  }
}

TEST_CASE("group laws, free action and quotient invariance") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> shift(-5, 5);
  std::uniform_int_distribution<int> point(-60, 60);
  for (int m = 2; m <= 6; ++m) {
    const DihedralGroup grp(m);
    for (int trial = 0; trial < 300; ++trial) {
      const GroupElement g{rng() % 2 ? 1 : -1, shift(rng)};
      const GroupElement h{rng() % 2 ? 1 : -1, shift(rng)};
      const int x = point(rng);
      CHECK(grp.apply(grp.compose(g, h), x) == grp.apply(g, grp.apply(h, x)));
      CHECK(grp.apply(grp.inverse(g), grp.apply(g, x)) == x);
      if (grp.apply(g, x) == x) CHECK(g.is_identity());
      CHECK(grp.q1(grp.apply(g, x)) == grp.q1(x));
      const int h2 = 2 * x + 1;
      CHECK(grp.q2_doubled(grp.apply_doubled(g, h2)) == grp.q2_doubled(h2));
    }
    for (int x = 1; x <= m - 1; ++x) CHECK(grp.q1(x) == x);
  }
}

TEST_CASE("reduce lands in the fundamental domain") {
  for (int m = 2; m <= 5; ++m) {
    const DihedralGroup grp(m);
    for (int x = -30; x <= 30; ++x) {
      const Reduction r = grp.reduce(x);
      CHECK(r.representative >= 1);
      CHECK(r.representative <= m - 1);
      CHECK(grp.apply(r.to_representative, x) == r.representative);
    }
  }
}

TEST_CASE("rotation centers sit over O_1 and O_m") {
  const DihedralGroup g(4);
  for (int h = -21; h <= 21; h += 2) {
    const int label = g.q2_doubled(h);
    CHECK(g.is_rotation_center_doubled(h) == (label == 1 || label == 4));
  }
}

TEST_CASE("context validation") {
  CHECK_NOTHROW(make_pong_context(2, 1));
  CHECK_THROWS_AS(make_pong_context(1, 1), InvalidArgument);
  CHECK_THROWS_AS(make_pong_context(3, 3), InvalidArgument);
  CHECK_THROWS_AS(make_pong_context(3, 0), InvalidArgument);
  CHECK_NOTHROW(make_asteroids_context(1, 1));
  CHECK_NOTHROW(make_asteroids_context(3, 3));
  CHECK_THROWS_AS(make_asteroids_context(3, 4), InvalidArgument);
}
