#include "doctest.h"

#include <random>

#include "pong/errors.hpp"
#include "pong/io.hpp"

using namespace pong;

namespace {

LiftedPermutation lp(int m, std::vector<int> dom, std::vector<int> vals) {
  const int k = static_cast<int>(dom.size());
  return LiftedPermutation({m, k}, std::move(dom), std::move(vals));
}

}  // namespace

TEST_CASE("generator records") {
  const auto f = lp(3, {2}, {-1});
  const GeneratorRecord r = to_record(f);
  CHECK(r == GeneratorRecord{"pong", 3, 1, {2}, {-1}});
  CHECK(to_json(r).dump() == R"({"algebra":"pong","m":3,"k":1,"domain":[2],"values":[-1]})");
  CHECK(to_pong(generator_record_from_json(to_json(r))) == f);

  // The algebra key may be left to the caller.
  const Json bare = parse_json(R"({"m":3,"k":1,"domain":[2],"values":[-1]})");
  CHECK_THROWS_AS(generator_record_from_json(bare), InvalidArgument);
  CHECK(generator_record_from_json(bare, "pong") == r);

  const auto a = CyclicLiftedPermutation({3, 2}, {1, 2}, {6, 1});
  CHECK(to_asteroids(generator_record_from_json(to_json(to_record(a)))) == a);
  CHECK_THROWS_AS(to_pong(to_record(a)), InvalidArgument);
}

TEST_CASE("malformed generator records are rejected") {
  const char* bad[] = {
      R"([1, 2])",
      R"({"algebra":"pong","m":3,"k":1,"domain":[2]})",
      R"({"algebra":"pong","m":3,"k":1,"domain":[2],"values":[1.5]})",
      R"({"algebra":"pong","m":3,"k":1,"domain":[2],"values":["1"]})",
      R"({"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2],"extra":0})",
      R"({"algebra":"tennis","m":3,"k":1,"domain":[2],"values":[2]})",
      R"({"algebra":"pong","m":3,"k":1,"domain":[2],"values":[99999999999]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(generator_record_from_json(parse_json(text)), InvalidArgument);
  }
  CHECK_THROWS_AS(parse_json("{"), InvalidArgument);
  // Well-formed but not a generator.
  CHECK_THROWS_AS(to_pong({"pong", 3, 2, {1, 2}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(to_pong({"pong", 3, 2, {2}, {2}}), InvalidArgument);
  CHECK_THROWS_AS(to_pong({"pong", 1, 1, {1}, {1}}), InvalidArgument);
}

TEST_CASE("element records are canonical") {
  PongElement a;
  a.add(lp(3, {2}, {2}), Monomial({1, 1, 0}));
  a.add(lp(3, {1}, {1}), Monomial({0, 2, 0}));
  a.add(lp(3, {1}, {1}), Monomial({0, 0, 0}));
  const std::string text = to_json(a).dump();
  CHECK(text ==
        R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[1],"values":[1]},"monomials":[[0,0,0],[0,2,0]]},)"
        R"({"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[1,1,0]]}]})");
  CHECK(pong_element_from_json(parse_json(text)) == a);

  // Input order does not matter; output order does not depend on it.
  const Json shuffled = parse_json(
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[1,1,0]]},)"
      R"({"generator":{"algebra":"pong","m":3,"k":1,"domain":[1],"values":[1]},"monomials":[[0,2,0],[0,0,0]]}]})");
  CHECK(to_json(pong_element_from_json(shuffled)).dump() == text);

  CHECK(to_json(PongElement{}).dump() == R"({"terms":[]})");
  CHECK(pong_element_from_json(parse_json(R"({"terms":[]})")).is_zero());
}

TEST_CASE("malformed element records are rejected") {
  const char* bad[] = {
      // duplicate monomial
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[1,0,0],[1,0,0]]}]})",
      // duplicate generator
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[1,0,0]]},)"
      R"({"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[0,1,0]]}]})",
      // wrong length, negative exponent, no monomials
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[1,0]]}]})",
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[-1,0,0]]}]})",
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[]}]})",
      // mixed algebras
      R"({"terms":[{"generator":{"algebra":"pong","m":3,"k":1,"domain":[2],"values":[2]},"monomials":[[0,0,0]]},)"
      R"({"generator":{"algebra":"pong","m":4,"k":1,"domain":[2],"values":[2]},"monomials":[[0,0,0,0]]}]})",
      R"({"terms":{}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(pong_element_from_json(parse_json(text)), InvalidArgument);
  }
}

TEST_CASE("element_algebra") {
  CHECK(element_algebra(parse_json(R"({"m":3,"k":1,"domain":[2],"values":[2]})"), "asteroids") == "asteroids");
  CHECK(element_algebra(parse_json(R"({"terms":[]})"), "pong") == "pong");
  CHECK(element_algebra(parse_json(
                            R"({"terms":[{"generator":{"algebra":"asteroids","m":3,"k":1,"domain":[2],"values":[2]},)"
                            R"("monomials":[[0,0,0]]}]})"),
                        "pong") == "asteroids");
}

TEST_CASE("randomized element round trips") {
  std::mt19937 rng(7);
  const auto gens = enumerate_generators({4, 2}, 3);
  for (int trial = 0; trial < 200; ++trial) {
    PongElement a;
    const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int t = 0; t < terms; ++t) {
      const auto& g = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
      std::vector<int> e(4);
      for (int& x : e) x = std::uniform_int_distribution<int>(0, 3)(rng);
      a.add(g, Monomial(e));
    }
    const std::string text = dump(to_json(a));
    CHECK(pong_element_from_json(parse_json(text)) == a);
    CHECK(dump(to_json(pong_element_from_json(parse_json(text)))) == text);
  }
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.suite = "dga";
  r.algebra = "pong";
  r.m = 3;
  r.k = 1;
  r.max_disp = 2;
  const auto c = r.check_index("d_squared");
  r.record(c, true, [] { return Failure{}; });
  r.record(c, false, [] { return Failure{"", {{{2}, {-1}}}, "d(d(f)) != 0"}; });
  r.wall_time_ms = 12.4;

  const Json j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["wall_time_ms"] == 12);
  CHECK(j["failures"][0]["check"] == "d_squared");
  CHECK(!to_json(r, false).contains("wall_time_ms"));

  const VerificationReport back = report_from_json(j);
  CHECK(dump(to_json(back)) == dump(j));
  CHECK(back.checks[0].run == 2);
  CHECK(back.checks[0].failed == 1);
}
