#include "germdyn/arith.hpp"
#include "germdyn/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace germdyn;

TEST_CASE("integer and rational text forms") {
  CHECK(parse_integer("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_integer("12a"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("powers and digits") {
  CHECK(pow2(10) == 1024);
  CHECK(ipow(Integer(3), 5) == 243);
  CHECK(decimal_digits(Integer(0)) == 1);
  CHECK(decimal_digits(Integer(999)) == 3);
  CHECK(decimal_digits(Integer(1000)) == 4);
  Integer big = ipow(Integer(10), 500);
  CHECK(decimal_digits(big) == 501);
  CHECK(decimal_digits(big - 1) == 500);
}

TEST_CASE("dyadic normalization and rendering") {
  Dyadic a(Integer(6), 3);  // 6/8 = 3/4
  CHECK(a.numerator() == 3);
  CHECK(a.exponent() == 2);
  CHECK(to_string(a) == "3/2^2");
  CHECK(Dyadic(Integer(0), 7) == Dyadic(0));
  CHECK(Dyadic(Integer(0), 7).exponent() == 0);
  CHECK(to_string(Dyadic(Integer(57), 8)) == "57/2^8");
  CHECK((Dyadic(Integer(1), 1) + Dyadic(Integer(1), 1)) == Dyadic(1));
  CHECK(Dyadic(Integer(-5), 7).to_rational() == Rational(-5, 128));
}

TEST_CASE("dyadic halving and exact comparison") {
  CHECK(halve(Dyadic(3), 1) == Dyadic(Integer(3), 1));
  CHECK(halve(Dyadic(3), -1) == Dyadic(Integer(-3), 1));
  CHECK(abs(Dyadic(Integer(-3), 2)) == Dyadic(Integer(3), 2));
  CHECK(abs_leq(Dyadic(Integer(1), 1), Rational(1, 2)));
  CHECK_FALSE(abs_leq(Dyadic(Integer(-3), 2), Rational(1, 2)));
}

TEST_CASE("arithmetic laws hold on 1000 random cases") {
  auto r = laws::arith(20240101, 1000);
  INFO(r.failure.value_or(""));
  CHECK(r.ok());
  CHECK(r.cases == 1000);
}
