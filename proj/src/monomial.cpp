#include "germdyn/monomial.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace germdyn {

MonomialIdeal2::MonomialIdeal2(const std::vector<Exponent>& gens) {
  std::vector<Exponent> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Sweep by increasing i: keep a generator iff its j beats every earlier one.
  std::uint32_t best_j = std::numeric_limits<std::uint32_t>::max();
  for (const auto& g : sorted) {
    if (g.j < best_j) {
      gens_.push_back(g);
      best_j = g.j;
    }
  }
  if (gens_.empty() || gens_.front().i != 0 || gens_.back().j != 0)
    throw NotPrimary("monomial ideal needs pure powers of both x and y");
}

MonomialIdeal2 MonomialIdeal2::maximal_power(std::uint32_t k) {
  std::vector<Exponent> g;
  for (std::uint32_t i = 0; i <= k; ++i) g.push_back({i, k - i});
  return MonomialIdeal2(g);
}

bool MonomialIdeal2::contains(const Exponent& e) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponent& g) { return g.i <= e.i && g.j <= e.j; });
}

MonomialIdeal2 minimalize(const std::vector<Exponent>& gens) { return MonomialIdeal2(gens); }

namespace {

// cross product of (b - a) and (c - a)
std::int64_t cross(const Exponent& a, const Exponent& b, const Exponent& c) {
  std::int64_t bx = std::int64_t(b.i) - a.i, by = std::int64_t(b.j) - a.j;
  std::int64_t cx = std::int64_t(c.i) - a.i, cy = std::int64_t(c.j) - a.j;
  return bx * cy - by * cx;
}

}  // namespace

Staircase staircase(const MonomialIdeal2& I) {
  Staircase s;
  s.corners = I.generators();
  // Lower convex hull of the generators, left to right (monotone chain).
  for (const auto& p : s.corners) {
    while (s.hull.size() >= 2 && cross(s.hull[s.hull.size() - 2], s.hull.back(), p) <= 0)
      s.hull.pop_back();
    s.hull.push_back(p);
  }
  Integer twice = 0;
  for (std::size_t k = 0; k + 1 < s.hull.size(); ++k)
    twice += Integer(s.hull[k + 1].i - s.hull[k].i) * (s.hull[k].j + s.hull[k + 1].j);
  s.covolume = Rational(twice, Integer(2));
  // Monomials outside I: below the staircase steps.
  Integer count = 0;
  for (std::size_t k = 0; k + 1 < s.corners.size(); ++k)
    count += Integer(s.corners[k + 1].i - s.corners[k].i) * s.corners[k].j;
  s.colength = count;
  return s;
}

Integer samuel_area(const MonomialIdeal2& I) {
  Rational twice = staircase(I).covolume * 2;
  return numerator(twice);
}

Integer colength_power(const MonomialIdeal2& I, std::uint32_t n) {
  if (n < 1) throw PreconditionFailed("colength_power needs n >= 1");
  const auto& gens = I.generators();
  const std::uint32_t width = n * I.x_power();
  // best[u] = least v with x^u y^v in I^k, for u < width.
  const std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::uint64_t> best(width, 0), next(width);
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t u = 0; u < width; ++u) {
      std::uint64_t b = inf;
      for (const auto& g : gens) {
        if (g.i > u) break;
        b = std::min<std::uint64_t>(b, g.j + best[u - g.i]);
      }
      next[u] = b;
    }
    std::swap(best, next);
  }
  Integer total = 0;
  for (auto b : best) total += b;
  return total;
}

Integer hilbert_samuel_fit(const MonomialIdeal2& I, std::uint32_t n_lo, std::uint32_t n_hi) {
  if (n_lo < 1 || n_hi < n_lo + 3) throw NotStabilized("fit window needs n_hi - n_lo >= 3");
  std::vector<Integer> L;
  for (std::uint32_t n = n_lo; n <= n_hi; ++n) L.push_back(colength_power(I, n));
  Integer second = L[2] - 2 * L[1] + L[0];
  for (std::size_t k = 3; k < L.size(); ++k)
    if (L[k] - 2 * L[k - 1] + L[k - 2] != second)
      throw NotStabilized("second differences not constant on [" + std::to_string(n_lo) + ", " +
                          std::to_string(n_hi) + "]");
  return second;
}

Integer samuel(const MonomialIdeal2& I) {
  Integer e = samuel_area(I);
  // Move the fit window out until the Hilbert-Samuel function is polynomial.
  for (std::uint32_t lo = 1; lo <= 64; lo *= 2) {
    try {
      Integer fit = hilbert_samuel_fit(I, lo, lo + 4);
      if (fit != e)
        throw Error("Samuel multiplicity mismatch: area gives " + e.str() + ", fit gives " + fit.str());
      return e;
    } catch (const NotStabilized&) {
    }
  }
  throw NotStabilized("Hilbert-Samuel function did not stabilize by n = 68");
}

MonomialIdeal2 product(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  std::vector<Exponent> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back({a.i + b.i, a.j + b.j});
  return MonomialIdeal2(g);
}

Integer mixed(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  Integer twice = samuel_area(product(I, J)) - samuel_area(I) - samuel_area(J);
  if (twice % 2 != 0)
    throw NonIntegralPolarization("e(IJ) - e(I) - e(J) = " + twice.str() + " is odd");
  return twice / 2;
}

bool minkowski_check(const MonomialIdeal2& I, const MonomialIdeal2& J) {
  Integer m = mixed(I, J);
  return m * m <= samuel_area(I) * samuel_area(J);
}

std::uint32_t containment_index(const MonomialIdeal2& I) {
  for (std::uint32_t s = 1;; ++s) {
    bool all = true;
    for (std::uint32_t i = 0; i <= s && all; ++i) all = I.contains({i, s - i});
    if (all) return s;
  }
}

MonomialIdeal2 random_monomial_ideal(std::uint64_t seed, std::uint32_t max_exp,
                                     std::uint32_t extra_generators) {
  if (max_exp < 1) throw PreconditionFailed("max_exp must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(1, max_exp), e(0, max_exp);
  std::vector<Exponent> g{{d(rng), 0}, {0, d(rng)}};
  for (std::uint32_t k = 0; k < extra_generators; ++k) g.push_back({e(rng), e(rng)});
  return MonomialIdeal2(g);
}

std::string to_string(const MonomialIdeal2& I) {
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ",";
    std::string m;
    if (g.i > 0) m += g.i == 1 ? "x" : "x^" + std::to_string(g.i);
    if (g.j > 0) m += std::string(m.empty() ? "" : "*") + (g.j == 1 ? "y" : "y^" + std::to_string(g.j));
    out += m.empty() ? "1" : m;
  }
  return out;
}

}  // namespace germdyn
