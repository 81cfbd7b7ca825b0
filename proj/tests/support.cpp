#include "support.hpp"

#include "germdyn/errors.hpp"
#include "germdyn/intersect.hpp"
#include "germdyn/recurrence.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

namespace oracle {

namespace {

std::map<std::string, std::vector<Rational>>& memo() {
  static std::map<std::string, std::vector<Rational>> m;
  return m;
}

}  // namespace

std::vector<Rational> coefficients(const BitSeq& s, std::size_t count) {
  auto& row = memo()[s.key()];
  if (row.size() >= count) return {row.begin(), row.begin() + static_cast<std::ptrdiff_t>(count)};
  std::vector<Rational> sigma;
  if (count >= 2) sigma = coefficients(s.shift(), (count - 2) / 4 + 1);
  auto& r = memo()[s.key()];
  if (r.empty()) r.push_back(s[0] ? Rational(-1) : Rational(1));
  while (r.size() < count) {
    const std::size_t n = r.size() - 1;  // computing a_(n+1)
    Rational sum = 0;
    for (std::size_t i = 1; i <= n; ++i) sum += r[i] * r[n + 1 - i];
    if (n % 4 == 0) sum += sigma[n / 4];
    r.push_back(-sum / (2 * r[0]));
  }
  return r;
}

std::optional<std::size_t> graph_intersection(const BitSeq& s, const BitSeq& t, std::size_t count) {
  auto a = coefficients(s, count), b = coefficients(t, count);
  for (std::size_t n = 0; n < count; ++n)
    if (a[n] != b[n]) return 2 + 4 * n;
  return std::nullopt;
}

std::optional<std::size_t> graph_order(const std::vector<Rational>& h, const BiPoly& q, std::size_t trunc) {
  using S = germdyn::USeries<Rational>;
  std::vector<Rational> hv(trunc);
  for (std::size_t k = 0; k < h.size() && k < trunc; ++k) hv[k] = h[k];
  S hs(hv), total(trunc);
  for (const auto& [m, c] : q.terms()) {
    S term = S::constant(c, trunc);
    for (std::uint32_t i = 0; i < m.i; ++i) term = germdyn::mul(term, hs);
    std::vector<Rational> shifted(trunc);
    for (std::size_t k = 0; k + m.j < trunc && k < term.trunc(); ++k) shifted[k + m.j] = term[k];
    total = total + S(shifted);
  }
  auto o = germdyn::ord(total);
  if (!o.determined) return std::nullopt;
  return o.value;
}

Integer brute_colength(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& gens, unsigned n) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> power{{0, 0}};
  for (unsigned k = 0; k < n; ++k) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> next;
    for (const auto& p : power)
      for (const auto& g : gens) next.insert({p.first + g.first, p.second + g.second});
    power = std::move(next);
  }
  std::uint32_t a = 0, b = 0;
  for (const auto& g : gens) {
    if (g.second == 0) a = a == 0 ? g.first : std::min(a, g.first);
    if (g.first == 0) b = b == 0 ? g.second : std::min(b, g.second);
  }
  Integer count = 0;
  for (std::uint32_t u = 0; u < n * a; ++u)
    for (std::uint32_t v = 0; v < n * b; ++v) {
      bool in = false;
      for (const auto& p : power)
        if (p.first <= u && p.second <= v) {
          in = true;
          break;
        }
      if (!in) ++count;
    }
  return count;
}

std::size_t digit_count(const Integer& v) { return v.str().size(); }

std::vector<BitSeq> pool() {
  static const char* literals[] = {
      "000000:(0)", "000001:(0)",  "000010:(1)",   "000011:(10)", "000100:(01)",
      "000101:(110)", "001000:(1)", "001101:(0)",  "010000:(0)",  "010101:(01)",
      "011011:(011)", "011111:(1)", "100000:(0)",  "100001:(1)",  "101010:(10)",
      "110000:(0)",  "110011:(0011)", "111000:(1)", "111110:(01)", "111111:(1)"};
  std::vector<BitSeq> out;
  for (const char* l : literals) out.push_back(germdyn::parse_bitseq(l));
  return out;
}

}  // namespace oracle

namespace laws {

using germdyn::BiPoly;
using germdyn::Dyadic;
using germdyn::Integer;
using germdyn::Rational;

namespace {

std::string str(const Dyadic& d) { return germdyn::to_string(d); }

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::uint64_t> ex(0, 20);
  return Dyadic(Integer(num(rng)), ex(rng));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

template <class S>
bool agree(const germdyn::USeries<S>& a, const germdyn::USeries<S>& b) {
  std::size_t n = std::min(a.trunc(), b.trunc());
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

germdyn::USeries<Rational> random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 16), val(-6, 6), lead(0, 3);
  std::vector<Rational> v(len(rng));
  std::size_t zeros = lead(rng);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = k < zeros ? Rational(0) : Rational(val(rng));
  return germdyn::USeries<Rational>(v);
}

germdyn::USeries<Dyadic> random_dyadic_series(std::mt19937_64& rng, std::size_t n) {
  std::vector<Dyadic> v(n);
  for (auto& d : v) d = random_dyadic(rng);
  return germdyn::USeries<Dyadic>(v);
}

/// Nonzero polynomial vanishing at the origin with small support.
BiPoly random_germ(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4), ex(0, 4), coef(-5, 5);
  BiPoly p;
  while (p.is_zero()) {
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
      std::uint32_t i = ex(rng), j = ex(rng);
      if (i == 0 && j == 0) continue;
      p.add_term(i, j, Rational(coef(rng)));
    }
  }
  return p;
}

std::string mult_str(const germdyn::Multiplicity& m) { return germdyn::to_string(m); }

Result fail(Result r, std::string why) {
  r.failure = std::move(why);
  return r;
}

}  // namespace

Result arith(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t k = 0; k < cases; ++k, ++r.cases) {
    Dyadic a = random_dyadic(rng), b = random_dyadic(rng), c = random_dyadic(rng);
    std::string ctx = " for a=" + str(a) + ", b=" + str(b) + ", c=" + str(c);
    if (a + b != b + a) return fail(r, "addition not commutative" + ctx);
    if (a * b != b * a) return fail(r, "multiplication not commutative" + ctx);
    if ((a + b) + c != a + (b + c)) return fail(r, "addition not associative" + ctx);
    if ((a * b) * c != a * (b * c)) return fail(r, "multiplication not associative" + ctx);
    if (a * (b + c) != a * b + a * c) return fail(r, "not distributive" + ctx);
    if (a - a != Dyadic(0)) return fail(r, "a - a != 0" + ctx);
    if ((a + b).to_rational() != a.to_rational() + b.to_rational())
      return fail(r, "sum disagrees with rational oracle" + ctx);
    if ((a * b).to_rational() != a.to_rational() * b.to_rational())
      return fail(r, "product disagrees with rational oracle" + ctx);
    const auto& n = a.numerator();
    if (!(n == 0 ? a.exponent() == 0 : (n % 2 != 0 || a.exponent() == 0)))
      return fail(r, "dyadic not normalized" + ctx);
    Rational q = random_rational(rng);
    if (germdyn::parse_rational(germdyn::to_string(q)) != q)
      return fail(r, "rational round trip failed for " + germdyn::to_string(q));
    Rational bound = boost::multiprecision::abs(random_rational(rng));
    if (germdyn::abs_leq(a, bound) != (boost::multiprecision::abs(a.to_rational()) <= bound))
      return fail(r, "abs_leq disagrees" + ctx);
    Integer i = Integer(static_cast<long>(rng() >> 1)) * Integer(static_cast<long>(rng() >> 1));
    if (germdyn::parse_integer(germdyn::to_string(i)) != i) return fail(r, "integer round trip");
  }
  return r;
}

Result series_ring(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t k = 0; k < cases; ++k, ++r.cases) {
    auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
    if (!agree(a * b, b * a) || (a * b).trunc() != (b * a).trunc())
      return fail(r, "series product not commutative at case " + std::to_string(k));
    if (!agree((a * b) * c, a * (b * c))) return fail(r, "series product not associative");
    if (!agree(a * (b + c), a * b + a * c)) return fail(r, "series product not distributive");
    auto oa = germdyn::ord(a), ob = germdyn::ord(b), oab = germdyn::ord(a * b);
    if (oa.determined && ob.determined && oa.value + ob.value < (a * b).trunc() &&
        !(oab.determined && oab.value == oa.value + ob.value))
      return fail(r, "ord(ab) != ord a + ord b");
    std::size_t e = 1 + rng() % 4;
    if (!agree(germdyn::compose_monomial(a * b, e),
               germdyn::compose_monomial(a, e) * germdyn::compose_monomial(b, e)))
      return fail(r, "substitution y -> y^k not multiplicative");
    std::size_t n = 1 + rng() % 40;
    auto da = random_dyadic_series(rng, n), db = random_dyadic_series(rng, n);
    if (germdyn::mul(da, db, germdyn::MulAlgorithm::schoolbook) !=
        germdyn::mul(da, db, germdyn::MulAlgorithm::subquadratic))
      return fail(r, "Kronecker product differs from schoolbook");
  }
  return r;
}

Result local_mult_symmetry(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t k = 0; k < cases; ++k, ++r.cases) {
    BiPoly p = random_germ(rng), q = random_germ(rng);
    germdyn::GenericSampler s1(seed + k), s2(seed + k + 1);
    auto a = germdyn::local_mult(p, q, s1).value, b = germdyn::local_mult(q, p, s2).value;
    if (!(a == b))
      return fail(r, "i0(" + germdyn::to_string(p) + ", " + germdyn::to_string(q) + ") = " + mult_str(a) +
                         " but reversed gives " + mult_str(b));
  }
  return r;
}

Result local_mult_multiplicativity(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4), deg(1, 4);
  Result r;
  while (r.cases < cases) {
    std::vector<Rational> h(deg(rng) + 1);
    for (std::size_t k = 1; k < h.size(); ++k) h[k] = coef(rng);
    BiPoly p = BiPoly::x();
    for (std::size_t k = 1; k < h.size(); ++k) p -= BiPoly::monomial(0, k, h[k]);
    BiPoly q = random_germ(rng), s = random_germ(rng);
    auto oq = oracle::graph_order(h, q, 64), os = oracle::graph_order(h, s, 64);
    if (!oq || !os) continue;  // shares the component x = h(y)
    germdyn::GenericSampler g(seed + r.cases);
    auto iq = germdyn::local_mult(p, q, g).value, is = germdyn::local_mult(p, s, g).value;
    auto iqs = germdyn::local_mult(p, q * s, g).value;
    std::string ctx = " for P=" + germdyn::to_string(p) + ", Q=" + germdyn::to_string(q) +
                      ", R=" + germdyn::to_string(s);
    if (!(iq == germdyn::Multiplicity::exact(Integer(*oq))))
      return fail(r, "i0(P,Q) = " + mult_str(iq) + " but graph oracle gives " + std::to_string(*oq) + ctx);
    if (!(is == germdyn::Multiplicity::exact(Integer(*os))))
      return fail(r, "i0(P,R) = " + mult_str(is) + " but graph oracle gives " + std::to_string(*os) + ctx);
    if (!(iqs == germdyn::Multiplicity::exact(Integer(*oq + *os))))
      return fail(r, "i0(P,QR) = " + mult_str(iqs) + " != i0(P,Q) + i0(P,R)" + ctx);
    ++r.cases;
  }
  return r;
}

Result recursion_holdout(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ord(1, 3), coef(-3, 3), init(-5, 5), pre(0, 2), noise(-50, 50);
  Result r;
  for (std::size_t k = 0; k < cases; ++k, ++r.cases) {
    std::size_t order = ord(rng), prefix = pre(rng);
    std::vector<Integer> c(order);
    for (auto& x : c) x = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    std::vector<Integer> s;
    for (std::size_t i = 0; i < prefix; ++i) s.push_back(noise(rng));
    for (std::size_t i = 0; i < order; ++i) s.push_back(init(rng));
    while (s.size() < prefix + 2 * order + 8) {
      Integer v = 0;
      for (std::size_t i = 0; i < order; ++i) v += c[i] * s[s.size() - 1 - i];
      s.push_back(v);
    }
    germdyn::RecurrenceModel m;
    try {
      m = germdyn::detect_recursion(s, 3, 2);
    } catch (const germdyn::NoRecurrenceFound&) {
      return fail(r, "no recursion found for a generated order-" + std::to_string(order) + " sequence");
    }
    if (m.order > order || m.onset > prefix)
      return fail(r, "model order " + std::to_string(m.order) + " onset " + std::to_string(m.onset) +
                         " not minimal (generated order " + std::to_string(order) + ", onset " +
                         std::to_string(prefix) + ")");
    for (std::size_t n = m.onset + m.order; n < s.size(); ++n) {
      Integer v = 0;
      for (std::size_t i = 0; i < m.order; ++i) v += m.coeffs[i] * s[n - 1 - i];
      if (v != m.lead * s[n]) return fail(r, "model misses term " + std::to_string(n));
    }
  }
  return r;
}

}  // namespace laws
