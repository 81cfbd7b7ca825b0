#include "germdyn/proximity.hpp"

#include "germdyn/errors.hpp"

#include <random>

namespace germdyn {

ProximityChart::ProximityChart(std::size_t points,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               char axis)
    : r_(points), prox_(points, std::vector<bool>(points, false)), axis_(axis) {
  if (points < 1) throw MalformedChart("chart needs at least one point");
  if (axis != 'x' && axis != 'y') throw MalformedChart("axis must be x or y");
  for (std::size_t i = 2; i <= r_; ++i) prox_[i - 1][i - 2] = true;
  for (const auto& [i, j] : pairs) {
    if (i < 1 || i > r_ || j < 1 || j >= i)
      throw MalformedChart("bad proximity pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    prox_[i - 1][j - 1] = true;
  }
  for (std::size_t i = 2; i <= r_; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 1; j < i; ++j) {
      if (!proximate(i, j)) continue;
      ++count;
      // A satellite point sits where E_(i-1) meets E_j, so i-1 lies on E_j too.
      if (j + 1 < i && !proximate(i - 1, j))
        throw MalformedChart("point " + std::to_string(i) + " is proximate to " + std::to_string(j) +
                             " but point " + std::to_string(i - 1) + " is not");
    }
    if (count > 2)
      throw MalformedChart("point " + std::to_string(i) + " is proximate to more than two points");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> ProximityChart::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 2; i <= r_; ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (proximate(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t ProximityChart::free_prefix() const {
  std::size_t k = 1;
  while (k < r_) {
    bool satellite = false;
    for (std::size_t j = 1; j + 1 < k + 1; ++j) satellite = satellite || proximate(k + 1, j);
    if (satellite) break;
    ++k;
  }
  return k;
}

IntegerMatrix ProximityChart::proximity_matrix() const {
  IntegerMatrix p = IntegerMatrix::Zero(r_, r_);
  for (std::size_t i = 0; i < r_; ++i) {
    p(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (prox_[i][j]) p(i, j) = -1;
  }
  return p;
}

ExceptionalLattice intersection_matrix(const ProximityChart& chart) {
  const std::size_t r = chart.size();
  IntegerMatrix p = chart.proximity_matrix();
  ExceptionalLattice l;
  l.intersection = IntegerMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < r; ++k) s += p(k, i) * p(k, j);
      l.intersection(i, j) = -s;
    }
  RationalMatrix n = to_rational(l.intersection);
  l.minors = leading_minors(n);
  for (std::size_t k = 0; k < r; ++k) {
    // (-1)^(k+1) det_(k+1) > 0
    bool ok = (k % 2 == 0) ? l.minors[k] < 0 : l.minors[k] > 0;
    if (!ok)
      throw NotNegativeDefinite("leading minor " + std::to_string(k + 1) + " = " +
                                to_string(l.minors[k]) + " has the wrong sign");
  }
  l.dual = *inverse(n);
  // Orders of pulled-back curves: P m with m_k the multiplicity of the
  // strict transform at point k.
  RationalMatrix pinv = *inverse(to_rational(p));
  std::vector<Integer> generic(r), axis(r);
  const std::size_t run = chart.free_prefix();
  for (std::size_t i = 0; i < r; ++i) {
    generic[i] = numerator(pinv(i, 0));
    Rational a = 0;
    for (std::size_t k = 0; k < run; ++k) a += pinv(i, k);
    axis[i] = numerator(a);
  }
  // The coordinate whose zero set is the followed axis picks up the run.
  if (chart.axis() == 'x') {
    l.x_order = generic;
    l.y_order = axis;
  } else {
    l.x_order = axis;
    l.y_order = generic;
  }
  for (std::size_t i = 0; i < r; ++i) l.b.push_back(std::min(l.x_order[i], l.y_order[i]));
  return l;
}

Rational skewness(const ExceptionalLattice& l, std::size_t i, std::size_t j) {
  const std::size_t r = l.b.size();
  if (i < 1 || i > r || j < 1 || j > r) throw PreconditionFailed("skewness index out of range");
  // Dual_i . Dual_j = (D^T N D)_ij = D_ij since N D = I and D is symmetric.
  return -l.dual(i - 1, j - 1) / Rational(l.b[i - 1] * l.b[j - 1]);
}

Rational skewness(const ProximityChart& chart, std::size_t i, std::size_t j) {
  return skewness(intersection_matrix(chart), i, j);
}

ProximityChart random_chart(std::uint64_t seed, std::size_t points) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  std::vector<std::vector<std::size_t>> prox(points + 1);
  for (std::size_t i = 2; i <= points; ++i) {
    prox[i].push_back(i - 1);
    // Besides free points, E_(i-1) meets the strict transforms through i-1.
    std::vector<std::size_t> choices;
    for (std::size_t j : prox[i - 1]) choices.push_back(j);
    std::uniform_int_distribution<std::size_t> d(0, choices.size());
    std::size_t pick = d(rng);
    if (pick < choices.size()) {
      prox[i].push_back(choices[pick]);
      extra.emplace_back(i, choices[pick]);
    }
  }
  char axis = std::uniform_int_distribution<int>(0, 1)(rng) ? 'x' : 'y';
  return ProximityChart(points, extra, axis);
}

}  // namespace germdyn
