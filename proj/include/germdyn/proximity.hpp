#pragma once

// Sequences of point blowups encoded by their proximity relation, with the
// intersection lattice of the exceptional divisors.

#include "germdyn/linalg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace germdyn {

/// Points are numbered 1..r; point i > 1 lies on E_(i-1).
class ProximityChart {
 public:
  /// `proximate` lists pairs (i, j), i > j: point i lies on the strict
  /// transform of E_j. Pairs (i, i-1) are implied. `axis` is "x" when the
  /// first points follow the curve y = 0, "y" when they follow x = 0.
  /// Throws MalformedChart on an invalid relation.
  ProximityChart(std::size_t points, const std::vector<std::pair<std::size_t, std::size_t>>& proximate,
                 char axis = 'x');

  std::size_t size() const noexcept { return r_; }
  char axis() const noexcept { return axis_; }
  bool proximate(std::size_t i, std::size_t j) const { return prox_.at(i - 1).at(j - 1); }
  /// Pairs (i, j), i > j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Number of leading points that are free (proximate only to the predecessor).
  std::size_t free_prefix() const;
  /// P with P_ii = 1 and P_ij = -1 when i is proximate to j.
  IntegerMatrix proximity_matrix() const;

 private:
  std::size_t r_;
  std::vector<std::vector<bool>> prox_;
  char axis_;
};

struct ExceptionalLattice {
  IntegerMatrix intersection;   // N_ij = E_i . E_j
  RationalMatrix dual;          // column i: coefficients of the dual divisor of E_i
  std::vector<Integer> x_order; // ord_(E_i)(x o pi)
  std::vector<Integer> y_order;
  std::vector<Integer> b;       // min(x_order, y_order)
  std::vector<Rational> minors; // leading principal minors of N
};

/// N = -P^T P; throws NotNegativeDefinite if a leading minor has the wrong sign.
ExceptionalLattice intersection_matrix(const ProximityChart& chart);

/// -(b_i^-1 dual_i) . (b_j^-1 dual_j), 1-based indices.
Rational skewness(const ExceptionalLattice& lattice, std::size_t i, std::size_t j);
Rational skewness(const ProximityChart& chart, std::size_t i, std::size_t j);

/// Seeded random well-formed chart with `points` points.
ProximityChart random_chart(std::uint64_t seed, std::size_t points);

}  // namespace germdyn
