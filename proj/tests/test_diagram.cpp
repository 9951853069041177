#include "doctest.h"

#include "pong/diagram.hpp"
#include "pong/errors.hpp"

using namespace pong;

namespace {

LiftedPermutation lp(int m, std::vector<int> dom, std::vector<int> vals) {
  const int k = static_cast<int>(dom.size());
  return LiftedPermutation({m, k}, std::move(dom), std::move(vals));
}

PongElement term(const LiftedPermutation& f, std::vector<int> exponents) {
  PongElement e;
  e.add(f, Monomial(std::move(exponents)));
  return e;
}

}  // namespace

TEST_CASE("local multiplicities of the bigon") {
  const auto f = lp(3, {2}, {-1});
  const auto g = lp(3, {2}, {2});
  CHECK(local_multiplicity(f, g, 0, 0) == 1);  // O_1
  CHECK(local_multiplicity(f, g, 1, 1) == 1);  // O_2
  CHECK(local_multiplicity(f, g, 2, 2) == 0);  // O_3
  CHECK(local_multiplicity(f, g, 40, -40) == 0);
  CHECK(local_multiplicity(f, g, -40, 40) == 0);
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) CHECK(local_multiplicity(f, f, i, j) == 0);
  }
  CHECK_THROWS_AS(local_multiplicity(f, lp(3, {1}, {1}), 0, 0), NoConnectingDomain);
}

TEST_CASE("O multiplicities") {
  const auto f = lp(3, {2}, {-1});
  CHECK(o_multiplicities(f, f) == std::vector<int>{0, 0, 0});
  CHECK(o_multiplicities(f, lp(3, {2}, {2})) == std::vector<int>{1, 1, 0});
  const auto a = lp(2, {1}, {-1});
  const auto b = lp(2, {1}, {0});
  CHECK(o_multiplicities(a, b) == domain_o_multiplicities(a, b));
  CHECK(o_multiplicities(a, b) == std::vector<int>{0, 1});
}

TEST_CASE("positivity") {
  const auto f = lp(3, {2}, {-1});
  const auto g = lp(3, {2}, {2});
  CHECK(positivity(f, f).order == Order::Equal);
  const auto fg = positivity(f, g);
  CHECK(fg.order == Order::Greater);
  REQUIRE(fg.path.size() == 1);
  CHECK(fg.path[0] == Crossing{3, 6});
  CHECK(domain_maslov_index(f, g) == Rational(1));
  CHECK(positivity(g, f).order == Order::Incomparable);
  CHECK_FALSE(domain_is_positive(g, f));
}

TEST_CASE("empty rectangles") {
  CHECK(empty_rectangles(lp(3, {2}, {2})).empty());
  const auto rects = empty_rectangles(lp(3, {2}, {-1}));
  REQUIRE(rects.size() == 1);
  CHECK(rects[0].shape == Shape::Bigon);
  CHECK(rects[0] == PlanarRectangle{3, 6, 6, 3, Shape::Bigon});

  // Found by exhaustive search over P(4,2), displacement <= 4: one of the
  // three crossing rectangles holds a point of the state.
  const auto f = lp(4, {1, 2}, {1, -1});
  const auto cs = crossings(f);
  CHECK(cs == std::vector<Crossing>{{1, 2}, {5, 7}, {5, 8}});
  const auto er = empty_rectangles(f);
  CHECK(er.size() == 2);
  for (const auto& r : er) {
    for (int x = r.x1 + 1; x < r.x2; ++x) {
      if (f.contains(x)) CHECK_FALSE((r.y2 < f.evaluate(x) && f.evaluate(x) < r.y1));
    }
  }
}

TEST_CASE("oracle differential of the bigon") {
  CHECK(oracle_differential(lp(3, {2}, {-1})) == term(lp(3, {2}, {2}), {1, 1, 0}));
  CHECK(oracle_differential(lp(3, {2}, {2})).is_zero());
}

TEST_CASE("triangle domains") {
  const auto e = lp(3, {2}, {2});
  const auto de = triangle_domain(e, e);
  REQUIRE(de);
  CHECK(de->o_counts == std::vector<int>{0, 0, 0});
  CHECK(de->maslov == 0);
  CHECK(de->euler == Rational(1, 4));

  const auto d1 = triangle_domain(lp(3, {2}, {1}), lp(3, {1}, {0}));
  REQUIRE(d1);
  CHECK(d1->o_counts == std::vector<int>{0, 0, 0});
  CHECK(d1->weight_defect.doubled == std::vector<int>{0, 0, 0});
  CHECK(d1->diag_count == 0);
  CHECK(d1->maslov == 0);
  CHECK(d1->euler == Rational(1, 4));

  // Crossings add here (1 + 2 = 3) and the triangles have Maslov index 0.
  const auto d2 = triangle_domain(lp(3, {2}, {-1}), lp(3, {2}, {5}));
  REQUIRE(d2);
  CHECK(d2->o_counts == std::vector<int>{0, 0, 0});
  CHECK(d2->diag_count == 0);
  CHECK(d2->maslov == 0);

  CHECK_FALSE(triangle_domain(lp(3, {2}, {-1}), lp(3, {1}, {1})).has_value());
}

TEST_CASE("a triangle covering an orbifold point") {
  const auto f = lp(2, {1}, {0});
  const auto d = triangle_domain(f, f);
  REQUIRE(d);
  CHECK(d->o_counts == std::vector<int>{2, 0});
  CHECK(d->weight_defect.doubled == std::vector<int>{4, 0});
  // k/4 + O_1/2 + O_m/2
  CHECK(d->euler == Rational(5, 4));
  // Sarkar: 2e - k/2 + diagonal = 5/2 - 1/2 + 1.
  CHECK(d->diag_count == 1);
  CHECK(d->maslov == 3);
  CHECK(euler_measure(*d) == d->euler);
}

TEST_CASE("diagonal count on hand-built triangles") {
  // Quarter units, m = 6: rotation centers sit at 2 + 20n on the diagonal,
  // and these triangles avoid them.
  const DihedralGroup grp(6);
  // Far apart: nothing.
  CHECK(diagonal_count(grp, {{{8, 8}, 2}, {{120, 124}, 6}}) == 0);
  // Translates of each other: L is a translation.
  CHECK(diagonal_count(grp, {{{8, 8}, 6}, {{24, 24}, 6}}) == 0);
  // A small triangle strictly inside a larger one, not a translate.
  CHECK(diagonal_count(grp, {{{4, 4}, 10}, {{5, 5}, 2}}) == 2);
}

TEST_CASE("oracle product examples") {
  const auto e = lp(3, {2}, {2});
  const auto f = lp(3, {2}, {-1});
  CHECK(oracle_product(e, f) == PongElement::generator(f));
  CHECK(oracle_product(lp(3, {2}, {1}), lp(3, {1}, {0})) == PongElement::generator(lp(3, {2}, {0})));
  CHECK(oracle_product(f, lp(3, {1}, {1})).is_zero());
}

TEST_CASE("fractions") {
  CHECK(to_fraction_string(Rational(5, 4)) == "5/4");
  CHECK(to_fraction_string(Rational(2)) == "2/1");
  CHECK(parse_fraction("-3/6") == Rational(-1, 2));
  CHECK(parse_fraction("7") == Rational(7));
  CHECK_THROWS_AS(parse_fraction("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_fraction("x"), InvalidArgument);
}

TEST_CASE("lattice states are the graphs of generators") {
  for (const auto& f : enumerate_generators({4, 2}, 3)) {
    CHECK(from_lattice_state(f.context(), lattice_state(f)) == f);
  }
  const LiftedPermutation f({4, 2}, {1, 2}, {5, 0});
  CHECK(lattice_state(f).points == std::vector<std::pair<int, int>>{{1, 5}, {2, 0}});
  // Points moved by translations (x + 6) and reflections (1 - x) describe the same state.
  CHECK(from_lattice_state({4, 2}, {{{8, 6}, {7, 11}}}) == f);
  CHECK(from_lattice_state({4, 2}, {{{-1, 1}, {0, -4}}}) == f);
  CHECK_THROWS_AS(from_lattice_state({4, 2}, {{{1, 5}, {7, 3}}}), InvalidArgument);
  CHECK_THROWS_AS(from_lattice_state({4, 2}, {{{1, 5}, {2, 2}}}), InvalidArgument);
}
