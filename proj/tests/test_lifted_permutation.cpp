#include "doctest.h"

#include <algorithm>

#include "pong/errors.hpp"
#include "pong/lifted_permutation.hpp"
#include "pong/pong_algebra.hpp"

using namespace pong;

namespace {

LiftedPermutation lp(int m, std::vector<int> dom, std::vector<int> vals) {
  const int k = static_cast<int>(dom.size());
  return LiftedPermutation({m, k}, std::move(dom), std::move(vals));
}

// Every G_m-translate (i', j') of the pair with |shift| <= 3.
std::vector<std::pair<int, int>> translates(const DihedralGroup& grp, int i, int j) {
  std::vector<std::pair<int, int>> out;
  for (int sign : {1, -1}) {
    for (int n = -3; n <= 3; ++n) {
      const GroupElement g{sign, n};
      const int a = grp.apply(g, i);
      const int b = grp.apply(g, j);
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validation rejects malformed generators") {
  CHECK_THROWS_AS(lp(3, {3}, {3}), InvalidArgument);           // 3 is not in {1,2}
  CHECK_THROWS_AS(lp(4, {2, 1}, {1, 2}), InvalidArgument);     // not increasing
  CHECK_THROWS_AS(lp(4, {1, 2}, {1, 0}), InvalidArgument);     // q1(0) = q1(1)
  CHECK_THROWS_AS(LiftedPermutation({4, 2}, {1}, {1}), InvalidArgument);
  CHECK_NOTHROW(lp(3, {1, 2}, {2, 1}));
}

TEST_CASE("evaluate uses the equivariant extension") {
  const auto f = lp(3, {2}, {-1});
  CHECK(f.evaluate(2) == -1);
  CHECK(f.evaluate(-1) == 2);
  CHECK(f.evaluate(3) == 6);
  CHECK_THROWS_AS(lp(4, {2}, {2}).evaluate(1), InvalidArgument);
}

TEST_CASE("evaluate is equivariant") {
  for (int m = 2; m <= 4; ++m) {
    const DihedralGroup grp(m);
    for (const auto& f : enumerate_generators({m, 1}, 3)) {
      for (int x = -15; x <= 15; ++x) {
        if (!f.contains(x)) continue;
        for (int sign : {1, -1}) {
          for (int n = -2; n <= 2; ++n) {
            const GroupElement g{sign, n};
            CHECK(f.evaluate(grp.apply(g, x)) == grp.apply(g, f.evaluate(x)));
          }
        }
      }
    }
  }
}

TEST_CASE("weight vectors of the worked examples") {
  CHECK(weight_vector(lp(3, {2}, {2})).doubled == std::vector<int>{0, 0, 0});
  CHECK(weight_vector(lp(3, {2}, {-1})).doubled == std::vector<int>{2, 2, 0});
  CHECK(weight_vector(lp(3, {1}, {3})).doubled == std::vector<int>{0, 1, 2});
  CHECK(weight_vector(lp(3, {1}, {3})).to_string() == "(0, 1/2, 1)");
  CHECK(weight_vector(lp(3, {2}, {1})).doubled == std::vector<int>{0, 1, 0});
  CHECK(weight_vector(lp(3, {1}, {0})).doubled == std::vector<int>{2, 0, 0});
}

TEST_CASE("crossings of the worked examples") {
  CHECK(crossings(lp(3, {2}, {2})).empty());

  const auto f = lp(3, {2}, {-1});
  const auto cf = crossings(f);
  REQUIRE(cf.size() == 1);
  CHECK(cf[0] == Crossing{3, 6});
  // The class is the one of the pair (-1, 2).
  CHECK(canonical_crossing(f.group(), -1, 2) == cf[0]);

  const auto g = lp(2, {1}, {-1});
  const auto cg = crossings(g);
  REQUIRE(cg.size() == 2);
  CHECK(canonical_crossing(g.group(), 0, 1) == cg[0]);
  CHECK(canonical_crossing(g.group(), 0, 3) == cg[1]);
  CHECK(cg[0] == Crossing{2, 3});
  CHECK(cg[1] == Crossing{2, 5});
}

TEST_CASE("resolutions of the worked examples") {
  const auto f = lp(3, {2}, {-1});
  CHECK(resolve(f, crossings(f)[0]) == lp(3, {2}, {2}));
  CHECK(resolve(f, {-1, 2}) == lp(3, {2}, {2}));

  const auto g = lp(2, {1}, {-1});
  CHECK(resolve(g, {0, 1}) == lp(2, {1}, {2}));
  CHECK(resolve(g, {0, 3}) == lp(2, {1}, {0}));

  CHECK_THROWS_AS(resolve(f, {1, 2}), InvalidArgument);
}

TEST_CASE("compose examples") {
  CHECK(compose(lp(3, {2}, {2}), lp(3, {2}, {-1})) == lp(3, {2}, {-1}));
  CHECK(compose(lp(3, {2}, {1}), lp(3, {1}, {0})) == lp(3, {2}, {0}));
  CHECK_FALSE(compose(lp(3, {2}, {-1}), lp(3, {1}, {1})).has_value());
}

TEST_CASE("canonical representatives are stable under translation") {
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k < m; ++k) {
      for (const auto& f : enumerate_generators({m, k}, 3)) {
        const auto cs = crossings(f);
        CHECK(static_cast<int>(cs.size()) == crossing_count(f));
        CHECK(std::is_sorted(cs.begin(), cs.end()));
        for (const Crossing& c : cs) {
          CHECK(c.i < c.j);
          CHECK(c.i >= 1);
          CHECK(c.i <= 2 * m - 2);
          CHECK(f.evaluate(c.i) > f.evaluate(c.j));
          for (auto [a, b] : translates(f.group(), c.i, c.j)) {
            CHECK(canonical_crossing(f.group(), a, b) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("crossing count agrees with a wide-window brute force") {
  // Count translation orbits of inverting pairs with i in one period, over a
  // window far larger than any displacement bound, then fold reflections.
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k < m; ++k) {
      for (const auto& f : enumerate_generators({m, k}, 3)) {
        const auto& grp = f.group();
        std::vector<Crossing> seen;
        for (int i = 1; i <= grp.period(); ++i) {
          if (!f.contains(i)) continue;
          for (int j = i + 1; j <= i + 40; ++j) {
            if (f.contains(j) && f.evaluate(i) > f.evaluate(j)) seen.push_back(canonical_crossing(grp, i, j));
          }
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        CHECK(seen == crossings(f));
      }
    }
  }
}

TEST_CASE("resolution lowers crossings and keeps idempotents") {
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k < m; ++k) {
      for (const auto& f : enumerate_generators({m, k}, 4)) {
        for (const Crossing& c : crossings(f)) {
          const auto r = resolve(f, c);
          CHECK(crossing_count(r) <= crossing_count(f) - 1);
          CHECK(r.source() == f.source());
          CHECK(r.target() == f.target());
        }
      }
    }
  }
}

TEST_CASE("weights and crossings are subadditive under composition") {
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k < m; ++k) {
      const auto gens = enumerate_generators({m, k}, m == 4 && k == 2 ? 3 : 4);
      for (const auto& f : gens) {
        for (const auto& g : gens) {
          const auto h = compose(f, g);
          if (!h) continue;
          CHECK(entrywise_le(weight_vector(*h), weight_vector(f) + weight_vector(g)));
          CHECK(crossing_count(*h) <= crossing_count(f) + crossing_count(g));
        }
      }
    }
  }
}
