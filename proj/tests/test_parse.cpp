#include "germdyn/errors.hpp"
#include "germdyn/parse.hpp"

#include <doctest.h>

using namespace germdyn;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::size_t(-1);
}

}  // namespace

TEST_CASE("polynomial grammar") {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  CHECK(parse_poly("x^2 + 3*x*y - y") == x * x + Rational(3) * x * y - y);
  CHECK(parse_poly("2xy") == Rational(2) * x * y);
  CHECK(parse_poly("(x + y)^2") == x * x + Rational(2) * x * y + y * y);
  CHECK(parse_poly("(x + y)(x - y)") == x * x - y * y);
  CHECK(parse_poly("-x^2") == -(x * x));
  CHECK(parse_poly("x/2 + 0.25 y") == Rational(1, 2) * x + Rational(1, 4) * y);
  CHECK(parse_poly("x^2/(1+3)") == Rational(1, 4) * x * x);
  CHECK(parse_poly("−x") == -x);
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x - x").is_zero());
  CHECK(parse_poly("  7 ") == BiPoly(7));
}

TEST_CASE("polynomial errors carry a position") {
  CHECK(error_position("x + ") == 4);
  CHECK(error_position("x + z") == 4);
  CHECK(error_position("x / y") == 4);
  CHECK(error_position("x / 0") == 4);
  CHECK(error_position("(x + y") == 6);
  CHECK(error_position("x^1234567") == 2);
  CHECK(error_position("") == 0);
  CHECK(error_position("x)") == 1);
}

TEST_CASE("lists and maps") {
  auto l = parse_poly_list("(x^2, y^3 + x)");
  REQUIRE(l.size() == 2);
  CHECK(l[1] == parse_poly("y^3 + x"));
  CHECK(parse_poly_list("(x + y)*x, y").size() == 2);
  CHECK(parse_poly_list("(x + y)").size() == 1);
  MapGerm f = parse_map("(y^2, x^3)");
  CHECK(f.first() == parse_poly("y^2"));
  CHECK(f.second() == parse_poly("x^3"));
  CHECK(parse_map("x + y, x*y").second() == parse_poly("x*y"));
  CHECK_THROWS_AS(parse_map("(x, y, x)"), ParseError);
  CHECK_THROWS_AS(parse_map("(x + 1, y)"), DegenerateInput);
}

TEST_CASE("monomial ideals") {
  CHECK(to_string(parse_monomial_ideal("x^2, x*y, y^3")) == "y^3,x*y,x^2");
  CHECK(parse_monomial_ideal("x,y") == MonomialIdeal2::maximal());
  CHECK_THROWS_AS(parse_monomial_ideal("x^2 + y, y^3"), ParseError);
  CHECK_THROWS_AS(parse_monomial_ideal("x^2, x*y"), NotPrimary);
}

TEST_CASE("charts") {
  auto c = parse_chart(R"({"points": 3, "proximate": [[3, 1]], "axis": "y"})");
  CHECK(c.size() == 3);
  CHECK(c.axis() == 'y');
  CHECK(c.proximate(3, 1));
  CHECK(c.proximate(2, 1));
  CHECK(c.proximate(3, 2));
  CHECK(parse_chart(R"({"points": 2})").axis() == 'x');
  CHECK_THROWS_AS(parse_chart("{points: 3"), ParseError);
  CHECK_THROWS_AS(parse_chart(R"({"points": -1})"), MalformedChart);
  CHECK_THROWS_AS(parse_chart(R"({"points": 3, "proximate": [[3]]})"), MalformedChart);
  CHECK_THROWS_AS(parse_chart(R"({"points": 3, "axis": "z"})"), MalformedChart);
  CHECK_THROWS_AS(parse_chart(R"({"points": 4, "proximate": [[4, 1]]})"), MalformedChart);
}
