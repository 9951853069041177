#include "doctest.h"

#include "pong/errors.hpp"
#include "pong/polynomial.hpp"

using namespace pong;

TEST_CASE("monomials") {
  const Monomial a({1, 0, 2});
  const Monomial b({0, 1, 1});
  CHECK((a * b).exponents() == std::vector<int>{1, 1, 3});
  CHECK(a.to_string() == "v1*v3^2");
  CHECK(Monomial::one(3).to_string() == "1");
  CHECK(Monomial::variable(3, 2).exponents() == std::vector<int>{0, 1, 0});
  CHECK(Monomial::from_doubled_weight(WeightVector({2, 4, 0})).exponents() == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(Monomial::from_doubled_weight(WeightVector({1, 0})), InvariantViolation);
  CHECK_THROWS_AS(Monomial::from_doubled_weight(WeightVector({-2, 0})), InvariantViolation);
  CHECK_THROWS_AS(Monomial({-1}), InvalidArgument);
}

TEST_CASE("polynomial addition is symmetric difference") {
  const Monomial x({1, 0});
  const Monomial y({0, 1});
  Polynomial p(x);
  p += Polynomial(y);
  CHECK(p.monomials().size() == 2);
  p += Polynomial(x);
  CHECK(p == Polynomial(y));
  p.toggle(y);
  CHECK(p.is_zero());
  CHECK(Polynomial({x, x, y}) == Polynomial(y));
}

TEST_CASE("polynomial products over F_2") {
  const Monomial one({0, 0});
  const Monomial x({1, 0});
  const Monomial y({0, 1});
  const Polynomial s({one, x});
  // (1 + x)^2 = 1 + x^2 in characteristic 2.
  CHECK(s * s == Polynomial({one, Monomial({2, 0})}));
  CHECK((s * y).to_string() == "v2 + v1*v2");
}
