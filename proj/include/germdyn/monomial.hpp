#pragma once

// m-primary monomial ideals in k[[x, y]]: Samuel and mixed multiplicities
// from the Newton polygon, checked against Hilbert-Samuel counts.

#include "germdyn/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace germdyn {

/// Exponent pair (i, j) of x^i y^j.
struct Exponent {
  std::uint32_t i = 0, j = 0;
  auto operator<=>(const Exponent&) const = default;
};

class MonomialIdeal2 {
 public:
  /// The minimal generators of the ideal generated by `gens`.
  /// Throws NotPrimary without a pure power of x and a pure power of y.
  explicit MonomialIdeal2(const std::vector<Exponent>& gens);
  static MonomialIdeal2 maximal() { return MonomialIdeal2({{1, 0}, {0, 1}}); }
  static MonomialIdeal2 maximal_power(std::uint32_t k);

  /// Sorted by increasing i (so decreasing j).
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  /// Smallest a with x^a in I, smallest b with y^b in I.
  std::uint32_t x_power() const { return gens_.back().i; }
  std::uint32_t y_power() const { return gens_.front().j; }
  bool contains(const Exponent& e) const;

  friend bool operator==(const MonomialIdeal2&, const MonomialIdeal2&) = default;

 private:
  std::vector<Exponent> gens_;
};

MonomialIdeal2 minimalize(const std::vector<Exponent>& gens);

/// The region under the Newton polygon.
struct Staircase {
  std::vector<Exponent> corners;  // minimal generators
  std::vector<Exponent> hull;     // vertices of the Newton polygon, (0,b) .. (a,0)
  Rational covolume;              // area of the region under the polygon
  Integer colength;               // number of monomials not in I
};
Staircase staircase(const MonomialIdeal2& I);

/// e(I) = 2 * covolume. Cross-checked against hilbert_samuel_fit; a mismatch
/// throws Error.
Integer samuel(const MonomialIdeal2& I);
/// 2 * covolume alone.
Integer samuel_area(const MonomialIdeal2& I);

/// length(R / I^n).
Integer colength_power(const MonomialIdeal2& I, std::uint32_t n);

/// e(I) from the second differences of colength_power on [n_lo, n_hi],
/// which must be constant over the whole window (NotStabilized otherwise).
Integer hilbert_samuel_fit(const MonomialIdeal2& I, std::uint32_t n_lo, std::uint32_t n_hi);

MonomialIdeal2 product(const MonomialIdeal2& I, const MonomialIdeal2& J);

/// e(I; J) = (e(IJ) - e(I) - e(J)) / 2.
Integer mixed(const MonomialIdeal2& I, const MonomialIdeal2& J);

/// mixed(I, J)^2 <= e(I) e(J).
bool minkowski_check(const MonomialIdeal2& I, const MonomialIdeal2& J);

/// Least s >= 1 with every monomial of degree s in I.
std::uint32_t containment_index(const MonomialIdeal2& I);

/// A seeded random m-primary ideal with exponents at most max_exp.
MonomialIdeal2 random_monomial_ideal(std::uint64_t seed, std::uint32_t max_exp = 6,
                                     std::uint32_t extra_generators = 3);

std::string to_string(const MonomialIdeal2& I);

}  // namespace germdyn
