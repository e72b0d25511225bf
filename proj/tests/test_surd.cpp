#include "doctest.h"

#include "homkt/surd.hpp"

using namespace homkt;

TEST_CASE("surd square roots reduce square factors") {
  CHECK(Surd::sqrt_of(Rat(4, 9)) == Surd(Rat(2, 3)));
  CHECK(Surd::sqrt_of(Rat(8)) == Surd::radical(Rat(2), 2));
  // sqrt(1/15) = sqrt(15)/15
  CHECK(Surd::sqrt_of(Rat(1, 15)) == Surd::radical(Rat(1, 15), 15));
}

TEST_CASE("single-term surd squares to a rational") {
  Surd a = Surd::radical(Rat(3, 5), 15);
  Surd sq = a * a;
  CHECK(sq.is_rational());
  CHECK(sq.as_rational() == Rat(27, 5));
}

TEST_CASE("product of distinct radicals") {
  // sqrt(6) * sqrt(10) = 2 sqrt(15)
  CHECK(Surd::radical(Rat(1), 6) * Surd::radical(Rat(1), 10) == Surd::radical(Rat(2), 15));
}

TEST_CASE("equality is coefficientwise") {
  Surd x = Surd(Rat(1, 2)) + Surd::radical(Rat(1), 3);
  Surd y = Surd::radical(Rat(1), 3) + Surd(Rat(1, 2));
  CHECK(x == y);
  CHECK(x != x + Surd(Rat(1)));
  CHECK((x - y).is_zero());
}

TEST_CASE("inverse of multi-term surds") {
  Surd x = Surd(Rat(1)) + Surd::radical(Rat(1), 2);   // 1 + sqrt(2)
  CHECK((x * x.inverse()) == Surd(Rat(1)));
  Surd y = Surd(Rat(4)) + Surd::radical(Rat(-2, 3), 15) + Surd::radical(Rat(-2, 3), 3);
  CHECK((y * y.inverse()) == Surd(Rat(1)));
  CHECK_THROWS_AS(Surd().inverse(), Error);
}

TEST_CASE("surd strings round trip") {
  Surd x = Surd(Rat(1, 2)) + Surd::radical(Rat(-3, 5), 15);
  CHECK(x.str() == "1/2-3/5*sqrt(15)");
  CHECK(Surd::parse(x.str()) == x);
  CHECK(Surd::parse("0") == Surd());
  CHECK(Surd::parse("sqrt(15)") == Surd::radical(Rat(1), 15));
}

TEST_CASE("complex surd arithmetic") {
  CSurd z(Surd(Rat(1)), Surd::radical(Rat(1), 3));  // 1 + i sqrt(3)
  CSurd w = z * z.conj();
  CHECK(w.im.is_zero());
  CHECK(w.re.as_rational() == Rat(4));
  CHECK((z * z.inverse()) == CSurd(Surd(Rat(1))));
}
