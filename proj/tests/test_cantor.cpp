#include "germdyn/cantor.hpp"
#include "germdyn/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace germdyn;

TEST_CASE("first coefficients of the zero sequence") {
  CoeffTable table;
  auto row = table.row(BitSeq::zeros(), 6);
  std::vector<Rational> expected{1, Rational(-1, 2), Rational(-1, 8), Rational(-1, 16), Rational(-5, 128),
                                 Rational(57, 256)};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(row[n].to_rational() == expected[n]);
}

TEST_CASE("coefficients match the rational recursion oracle") {
  CoeffTable table;
  for (const auto& s : oracle::pool()) {
    auto fast = table.row(s, 160);
    auto slow = oracle::coefficients(s, 160);
    for (std::size_t n = 0; n < 160; ++n) {
      INFO("s = " << to_string(s) << ", n = " << n);
      REQUIRE(fast[n].to_rational() == slow[n]);
    }
  }
  CHECK(coeff(parse_bitseq("1:(0)"), 0) == Dyadic(-1));
  CHECK(coeff(parse_bitseq("01:(0)"), 1) == Dyadic(Integer(1), 1));  // -a0(sigma)/2a0 = +1/2
}

TEST_CASE("curve series places a_n at exponent 2 + 4n") {
  CoeffTable table;
  auto g = curve(BitSeq::zeros(), 23, table);
  CHECK(g.trunc() == 23);
  CHECK(g[2] == Dyadic(1));
  CHECK(g[6] == Dyadic(Integer(-1), 1));
  CHECK(g[22] == Dyadic(Integer(57), 8));
  CHECK(g[3] == Dyadic(0));
}

TEST_CASE("functoriality identity") {
  CoeffTable table;
  for (const auto& s : oracle::pool()) {
    auto r = verify_functoriality(s, 400, table);
    CHECK(r.ok);
    CHECK(r.checked_below == 400);
  }
}

TEST_CASE("functoriality detects a perturbed coefficient at 4 + 4n") {
  CoeffTable table;
  BitSeq s = parse_bitseq("0110:(10)");
  const std::size_t N = 200;
  auto g = curve(s, N, table);
  auto gs = curve(s.shift(), N / 4 + 1, table);
  REQUIRE(verify_functoriality(g, gs, N).ok);
  for (std::size_t n : {0u, 3u, 11u, 40u}) {
    auto bad = g;
    bad[2 + 4 * n] += Dyadic(Integer(1), 20);
    auto r = verify_functoriality(bad, gs, N);
    CHECK_FALSE(r.ok);
    REQUIRE(r.exponent);
    CHECK(*r.exponent == 4 + 4 * n);
  }
}

TEST_CASE("coefficient bound with equality only at n = 1") {
  CoeffTable table;
  for (const auto& s : oracle::pool()) {
    auto r = verify_bound(s, 300, table);
    CHECK(r.ok);
    CHECK(r.equalities == std::vector<std::size_t>{1});
  }
  // A smaller constant fails already at n = 1.
  auto r = verify_bound(BitSeq::zeros(), 50, table, Rational(1, 40));
  CHECK_FALSE(r.ok);
  CHECK(r.failure == std::size_t{1});
}

TEST_CASE("convolution sum: closed form, direct sum and bound") {
  for (std::size_t n = 1; n <= 60; ++n) CHECK(lemma_lhs_closed(n) == lemma_lhs_direct(n));
  CHECK(lemma_lhs_direct(1) == 1);
  CHECK(lemma_lhs_direct(2) == Rational(1, 2));
  CHECK(lemma_sum_check(1));
  auto sweep = lemma_sweep(2000);
  CHECK(sweep.ok);
  CHECK(sweep.checked_up_to == 2000);
}

TEST_CASE("intersection numbers from the first differing bit") {
  const Integer expected[] = {2, 6, 22, 86, 342, 1366};
  for (int m = 0; m <= 5; ++m) CHECK(mult_from_index(Integer(m)) == expected[m]);
  CoeffTable table;
  BitSeq zero = BitSeq::zeros();
  for (int m = 0; m <= 5; ++m) {
    std::string lit(static_cast<std::size_t>(m), '0');
    BitSeq t = parse_bitseq(lit + "1:(0)");
    auto f = mult_formula(zero, t);
    auto c = mult_coeffwise(zero, t, 400, table);
    CHECK(f == Multiplicity::exact(expected[m]));
    CHECK(c == f);
    CHECK(oracle::graph_intersection(zero, t, 400) == static_cast<std::size_t>(expected[m]));
  }
  CHECK(mult_formula(zero, zero).is_infinite());
  CHECK(mult_coeffwise(zero, zero, 10, table) == Multiplicity::at_least(Integer(42)));
  CHECK(mult_formula(zero, parse_bitseq("0000001"), Integer(3)) == Multiplicity::at_least(Integer(86)));
}

TEST_CASE("shift recursion of intersection numbers") {
  auto pool = oracle::pool();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) CHECK(shift_recursion_check(pool[i], pool[j], Integer(100)));
  CHECK_THROWS_AS(shift_recursion_check(BitSeq::zeros(), BitSeq::zeros(), Integer(10)), UndeterminedDifference);
}

TEST_CASE("digit counts of (4^(M+1) + 2) / 3") {
  for (long M : {0L, 1L, 2L, 5L, 17L, 100L, 999L, 1000L, 4321L}) {
    INFO("M = " << M);
    CHECK(mu_digits(Integer(M)) == oracle::digit_count(mult_from_index(Integer(M))));
  }
  CHECK(mu_digits(Integer(10001)) == 6022);
}

TEST_CASE("growth witnesses beat nu") {
  auto pair = build_theoremA_pair(GrowthSpec::parse("pow:10"), 3);
  REQUIRE(pair.witnesses.size() == 3);
  CHECK(pair.witnesses[0].n == 0);
  CHECK(pair.witnesses[1].n == 3);
  CHECK(pair.witnesses[2].n == 1005);
  CHECK(pair.witnesses[1].M == 1001);
  CHECK(pair.certificate.all_finite);
  for (const auto& w : pair.witnesses) {
    auto mu = mu_theoremA(pair.s, pair.t, w.n);
    REQUIRE(mu.M);
    CHECK(*mu.M == w.M);
    if (mu.value) CHECK(*mu.value > w.nu);
    CHECK(mu.digits > Integer(decimal_digits(w.nu)));
  }
  // the custom block sequence with a 10001-long zero run
  auto m = mu_theoremA(BitSeq::zeros(), parse_bitseq("0001:blocks[10001]"), Integer(4));
  REQUIRE(m.M);
  CHECK(*m.M == 10001);
  CHECK(m.digits == 6022);
  // t == s after some shift: infinite at that shift
  auto cert = finiteness_certificate(BitSeq::zeros(), parse_bitseq("0101"));
  CHECK_FALSE(cert.all_finite);
  CHECK(cert.infinite_at == Integer(4));
}
