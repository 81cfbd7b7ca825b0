#include "germdyn/errors.hpp"
#include "germdyn/intersect.hpp"
#include "germdyn/parse.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace germdyn;

namespace {

Multiplicity i0(const char* p, const char* q, std::uint64_t seed = 1) {
  GenericSampler sampler(seed);
  return local_mult(parse_poly(p), parse_poly(q), sampler).value;
}

}  // namespace

TEST_CASE("known local intersection numbers") {
  CHECK(i0("x", "y") == Multiplicity::exact(1));
  CHECK(i0("y - x^2", "y") == Multiplicity::exact(2));
  CHECK(i0("y^2 - x^3", "y") == Multiplicity::exact(3));
  CHECK(i0("y^2 - x^3", "x") == Multiplicity::exact(2));
  CHECK(i0("y^2 - x^3", "y^3 - x^2") == Multiplicity::exact(4));
  CHECK(i0("y - x^2", "y - x^3") == Multiplicity::exact(2));
  CHECK(i0("y^2 - x^3", "y^2 - x^3 - x^4") == Multiplicity::exact(8));
  CHECK(i0("x^2 + y^3", "x*y") == Multiplicity::exact(5));
  CHECK(i0("x*y", "x").is_infinite());
  CHECK(i0("y^2 - x^3", "2*y^2 - 2*x^3").is_infinite());
}

TEST_CASE("intersections away from the origin are not counted") {
  CHECK(i0("x*(x - 1)", "y") == Multiplicity::exact(1));
  CHECK(i0("y - x^2 + x", "y") == Multiplicity::exact(1));
  CHECK(i0("(x - 1)*(y - 2) + 2*x - 2 + x*y", "x - y") == i0("(x - 1)*(y - 2) + 2*x - 2 + x*y", "x - y", 99));
}

TEST_CASE("graph curves agree with the order of vanishing oracle") {
  std::vector<Rational> h{0, 0, 1, 0, Rational(-1, 2)};  // h(y) = y^2 - y^4/2
  for (const char* q : {"x", "x - y^2", "x - y^2 + y^5", "x^2 - y^4 + y^7", "y"}) {
    INFO(q);
    auto expected = oracle::graph_order(h, parse_poly(q), 64);
    REQUIRE(expected);
    CHECK(i0("x - y^2 + y^4/2", q) == Multiplicity::exact(Integer(*expected)));
  }
}

TEST_CASE("symmetry and multiplicativity on random curves") {
  auto sym = laws::local_mult_symmetry(5, 60);
  CHECK_MESSAGE(sym.ok(), sym.failure.value_or(""));
  auto mul = laws::local_mult_multiplicativity(6, 60);
  CHECK_MESSAGE(mul.ok(), mul.failure.value_or(""));
}

TEST_CASE("degenerate curves and maps") {
  CHECK_THROWS_AS(PlaneCurve(parse_poly("x + 1")), DegenerateInput);
  CHECK_THROWS_AS(PlaneCurve(BiPoly{}), DegenerateInput);
  CHECK_THROWS_AS(MapGerm(parse_poly("x + 1"), parse_poly("y")), DegenerateInput);
  CHECK(MapGerm(parse_poly("x^2"), parse_poly("y^2")).finiteness_certificate().ok);
  CHECK_FALSE(MapGerm(parse_poly("x*y"), parse_poly("x*y^2")).finiteness_certificate().ok);
}

TEST_CASE("pullback and iterates") {
  MapGerm f(parse_poly("x^2"), parse_poly("y + x"));
  CHECK(pullback(f, PlaneCurve(parse_poly("y"))).equation() == parse_poly("y + x"));
  auto [a, b] = f.iterate(2);
  CHECK(a == parse_poly("x^4"));
  CHECK(b == parse_poly("y + x + x^2"));
  auto [ia, ib] = MapGerm::identity().iterate(5);
  CHECK(ia == BiPoly::x());
  CHECK(ib == BiPoly::y());
}

TEST_CASE("mu sequence of a power map") {
  MapGerm f(parse_poly("x^2"), parse_poly("y^2"));
  GenericSampler sampler(7);
  auto seq = mu_sequence(f, {BiPoly::x(), BiPoly::y()}, {}, {}, 5, sampler);
  REQUIRE(seq.mu.size() == 6);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(seq.mu[n] == Integer(1) << n);
  CHECK(seq.certified);
  CHECK_FALSE(seq.infinite_at);

  GenericSampler again(7);
  auto repeat = mu_sequence(f, {BiPoly::x(), BiPoly::y()}, {}, {}, 5, again);
  CHECK(repeat.z == seq.z);
  CHECK(repeat.w == seq.w);
}

TEST_CASE("mu sequence stops at a shared component") {
  MapGerm f(parse_poly("x"), parse_poly("0"));
  GenericSampler sampler(3);
  auto seq = mu_sequence(f, {BiPoly::x(), BiPoly::y()}, {Integer(0), Integer(1)}, {Integer(0), Integer(1)}, 4,
                         sampler);
  REQUIRE(seq.infinite_at);
  CHECK(*seq.infinite_at == 0);
}

TEST_CASE("term budget is reported with progress") {
  MapGerm f(parse_poly("x^2 + x*y + y^3"), parse_poly("y^2 + x^3 + x*y"));
  GenericSampler sampler(1);
  try {
    mu_sequence(f, {BiPoly::x(), BiPoly::y()}, {}, {}, 8, sampler, 50);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.completed() < 8);
  }
}

TEST_CASE("multiplicity of an ideal from generic members") {
  GenericSampler sampler(11);
  CHECK(samuel_via_generic({parse_poly("x^2"), parse_poly("y^3")}, sampler) == 6);
  CHECK(samuel_via_generic({parse_poly("x^2 + y^3"), parse_poly("x*y")}, sampler) == 5);
  CHECK(samuel_via_generic({BiPoly::x(), BiPoly::y()}, sampler) == 1);
}
