#include "germdyn/series.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace germdyn;

TEST_CASE("truncated product tracks precision") {
  USeries<Rational> a(std::vector<Rational>{0, 1, 2});      // y + 2y^2 + O(y^3)
  USeries<Rational> b(std::vector<Rational>{1, 1, 0, 0});   // 1 + y + O(y^4)
  auto p = a * b;
  CHECK(p.trunc() == 3);
  CHECK(p[1] == 1);
  CHECK(p[2] == 3);
  USeries<Rational> z(5);
  auto o = ord(z);
  CHECK_FALSE(o.determined);
  CHECK(o.value == 5);
  CHECK(ord(a) == TruncOrder::exact(1));
}

TEST_CASE("substitution y -> y^k") {
  USeries<Rational> a(std::vector<Rational>{1, 2});
  auto c = compose_monomial(a, 4);
  CHECK(c.trunc() == 8);
  CHECK(c[0] == 1);
  CHECK(c[4] == 2);
  CHECK(c[1] == 0);
}

TEST_CASE("Kronecker and schoolbook products agree on long dyadic series") {
  std::vector<Dyadic> v(5000), w(5000);
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = Dyadic(Integer(static_cast<long>(k % 17) - 8), k % 9);
    w[k] = Dyadic(Integer(static_cast<long>(k % 13) - 6), (k * 7) % 11);
  }
  USeries<Dyadic> a(v), b(w);
  CHECK(mul(a, b, MulAlgorithm::schoolbook) == mul(a, b, MulAlgorithm::subquadratic));
}

TEST_CASE("series ring laws hold on 1000 random cases") {
  auto r = laws::series_ring(77, 1000);
  INFO(r.failure.value_or(""));
  CHECK(r.ok());
}
