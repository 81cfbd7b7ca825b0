// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "germdyn/cantor.hpp"
#include "germdyn/errors.hpp"
#include "germdyn/intersect.hpp"
#include "germdyn/monomial.hpp"
#include "germdyn/parse.hpp"
#include "germdyn/proximity.hpp"
#include "germdyn/recurrence.hpp"
#include "germdyn/valuation.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace germdyn;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

// Leading zeros read off the run-length structure; nullopt for 0^infinity.
std::optional<Integer> leading_zeros(const BitSeq& s) {
  Integer z = 0;
  for (const auto& run : s.runs()) {
    if (run.bit) return z;
    z += run.length;
  }
  for (bool b : s.cycle()) {
    if (b) return z;
    z += 1;
  }
  return std::nullopt;
}

Verdict mult_pool() {
  CoeffTable table;
  auto pool = oracle::pool();
  std::set<Integer> seen;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      auto f = mult_formula(pool[i], pool[j], Integer(6));
      auto c = mult_coeffwise(pool[i], pool[j], 400, table);
      if (!f.is_exact() || !(c == f))
        return fail("pair " + to_string(pool[i]) + " / " + to_string(pool[j]) + ": formula " + to_string(f) +
                    ", coefficients " + to_string(c));
      seen.insert(f.value());
      ++pairs;
    }
  std::set<Integer> expected{2, 6, 22, 86, 342, 1366};
  if (seen != expected) return fail("values seen do not cover 2, 6, 22, 86, 342, 1366");
  // the rational oracle agrees on pairs against the zero sequence
  for (std::size_t j = 1; j < pool.size(); ++j) {
    auto o = oracle::graph_intersection(pool[0], pool[j], 400);
    if (!o || Integer(*o) != mult_formula(pool[0], pool[j]).value())
      return fail("rational oracle disagrees for " + to_string(pool[j]));
  }
  return {true, std::to_string(pairs) + " pairs, values 2 6 22 86 342 1366"};
}

Verdict functoriality() {
  CoeffTable table;
  for (const auto& s : oracle::pool()) {
    auto r = verify_functoriality(s, 2000, table);
    if (!r.ok) return fail(to_string(s) + " at exponent " + std::to_string(r.exponent.value_or(0)));
  }
  return {true, "20 sequences, N = 2000"};
}

Verdict bound() {
  CoeffTable table;
  for (const auto& s : oracle::pool()) {
    auto r = verify_bound(s, 2000, table);
    if (!r.ok) return fail(to_string(s) + " fails at n = " + std::to_string(r.failure.value_or(0)));
    if (r.equalities != std::vector<std::size_t>{1}) return fail(to_string(s) + ": equality set is not {1}");
  }
  return {true, "20 sequences, N = 2000, equality only at n = 1"};
}

Verdict lemma() {
  auto r = lemma_sweep(10000);
  if (!r.ok) return fail("fails at n = " + std::to_string(r.failure.value_or(0)));
  for (std::size_t n : {1u, 2u, 3u, 10u, 57u, 100u})
    if (lemma_lhs_closed(n) != lemma_lhs_direct(n)) return fail("closed form differs at n = " + std::to_string(n));
  return {true, "1 <= n <= 10000"};
}

Verdict theorem_a() {
  auto nu = GrowthSpec::parse("pow:10");
  auto pair = build_theoremA_pair(nu, 3);
  if (pair.witnesses.size() != 3) return fail("expected 3 witnesses");
  std::ostringstream det;
  for (const auto& w : pair.witnesses) {
    if (w.nu != nu(w.n)) return fail("witness nu mismatch");
    // independent reading of the run structure: sigma^n t starts with exactly M zeros then a 1
    auto shifted = pair.t.shift(w.n);
    if (leading_zeros(shifted) != w.M || !shifted.bit(w.M))
      return fail("sigma^n t does not start with M zeros at n = " + w.n.str());
    if (w.M <= w.nu) return fail("M <= nu at n = " + w.n.str());
    if (w.M < 2000) {
      Integer mu = (Integer(1) << static_cast<unsigned>(2 * (w.M + 1))) / 3 + 1;
      if (mu != mult_from_index(w.M) || mu <= w.nu) return fail("mu <= nu at n = " + w.n.str());
    }
    if (w.mu_digits < Integer(oracle::digit_count(w.nu))) return fail("digit count too small");
    std::string d = w.mu_digits.str();
    det << " n=" << w.n << " digits=" << (d.size() <= 12 ? d : d.substr(0, 6) + "...(" + std::to_string(d.size()) + " digits)");
  }
  if (!pair.certificate.all_finite || !pair.t.cycle_contains(true) || !pair.s.runs().empty())
    return fail("finiteness not certified");
  for (Integer n = 0; n <= pair.horizon && n < 4000; ++n)
    if (!first_difference(pair.s, pair.t.shift(n))) return fail("infinite at n = " + n.str());
  return {true, "witnesses" + det.str() + "; finite for all n"};
}

Verdict pipeline() {
  MapGerm f = parse_map("(x^2 - y^4, y^4)");
  std::vector<BiPoly> gens{BiPoly::x(), BiPoly::y()};
  GenericSampler sampler(7);
  auto seq = mu_sequence(f, gens, {}, {}, 5, sampler);
  std::vector<Integer> expected{1, 2, 4, 8, 16, 32};
  if (seq.mu != expected) return fail("mu sequence differs");
  // composition-order oracle: restrict the pulled-back generic member to the line D_w
  for (unsigned n = 0; n <= 5; ++n) {
    auto [a, b] = f.iterate(n);
    BiPoly member = BiPoly(Rational(seq.z[0])) * a + BiPoly(Rational(seq.z[1])) * b;
    // D_w: w0 x + w1 y = 0, i.e. x = -(w1 / w0) y
    std::vector<Rational> h{0, -Rational(seq.w[1]) / Rational(seq.w[0])};
    auto o = oracle::graph_order(h, member, 80);
    if (!o || Integer(*o) != seq.mu[n]) return fail("oracle order differs at n = " + std::to_string(n));
  }
  auto rec = detect_recursion(seq.mu, 2, 1);
  if (rec.order != 1 || rec.coeffs != std::vector<Integer>{2} || !rec.integral())
    return fail("recursion is not mu(n+1) = 2 mu(n)");
  auto c = c_infinity(f, 6);
  if (c.value != Rational(2)) return fail("c_inf != 2");
  auto d = theoremD_check(seq.mu, 2);
  if (!d.pass || d.a1 != 1 || d.a2 != 1) return fail("ratio bounds differ: " + d.failure);
  return {true, "mu = 1 2 4 8 16 32, order 1 ratio 2, c_inf = 2, A1 = A2 = 1"};
}

Verdict mixed_mult() {
  auto m = MonomialIdeal2::maximal();
  MonomialIdeal2 a({{2, 0}, {0, 3}});
  if (samuel(m) != 1 || samuel(a) != 6 || samuel(product(m, a)) != 11 || mixed(m, a) != 2)
    return fail("small multiplicities differ");
  if (!minkowski_check(m, a) || mixed(m, a) * mixed(m, a) != 4 || samuel(m) * samuel(a) != 6)
    return fail("Minkowski 4 <= 6 not reproduced");
  GenericSampler sampler(31);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto I = random_monomial_ideal(seed);
    std::vector<BiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(BiPoly::monomial(g.i, g.j));
    Integer area = samuel_area(I), hs = hilbert_samuel_fit(I, 40, 44), generic = samuel_via_generic(gens, sampler);
    if (area != hs || area != generic)
      return fail(to_string(I) + ": area " + area.str() + ", HS " + hs.str() + ", generic " + generic.str());
  }
  return {true, "e = 1, 6, 11; mixed 2; 20 random ideals consistent"};
}

Verdict blowups() {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto chart = random_chart(seed, 6);
    try {
      auto L = intersection_matrix(chart);
      // Sylvester: minors alternate in sign starting negative
      for (std::size_t k = 0; k < L.minors.size(); ++k)
        if ((k % 2 == 0) != (L.minors[k] < 0)) return fail("minor sign at seed " + std::to_string(seed));
    } catch (const NotNegativeDefinite& e) {
      return fail(std::string("seed ") + std::to_string(seed) + ": " + e.what());
    }
  }
  ProximityChart chain(2, {});
  if (skewness(chain, 2, 2) != 2 || skewness(chain, 1, 2) != 1 || skewness(chain, 1, 1) != 1)
    return fail("two-point chain skewness differs");
  return {true, "50 charts negative definite; alpha = 2 and 1 on the two-point chain"};
}

Verdict properties() {
  std::ostringstream det;
  const std::pair<const char*, std::function<laws::Result()>> suites[] = {
      {"arith", [] { return laws::arith(20240101, 1000); }},
      {"series", [] { return laws::series_ring(77, 1000); }},
      {"symmetry", [] { return laws::local_mult_symmetry(5, 1000); }},
      {"multiplicativity", [] { return laws::local_mult_multiplicativity(6, 1000); }},
      {"recursion", [] { return laws::recursion_holdout(2024, 1000); }},
  };
  for (const auto& [name, run] : suites) {
    auto r = run();
    if (!r.ok()) return fail(std::string(name) + ": " + *r.failure);
    if (r.cases < 1000) return fail(std::string(name) + ": only " + std::to_string(r.cases) + " cases");
    det << " " << name << "=" << r.cases;
  }
  return {true, "cases" + det.str()};
}

}  // namespace

int main() {
  const std::pair<int, Verdict (*)()> criteria[] = {
      {1, mult_pool}, {2, functoriality}, {3, bound},     {4, lemma},      {5, theorem_a},
      {6, pipeline},  {7, mixed_mult},    {8, blowups},   {9, properties},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && v.pass;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " (" << v.detail << ", "
              << static_cast<long>(secs * 1000) << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
