#pragma once

// Independent oracles and randomized law checks shared by the unit tests and
// the acceptance runner.

#include "germdyn/bipoly.hpp"
#include "germdyn/bitseq.hpp"
#include "germdyn/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using germdyn::BiPoly;
using germdyn::BitSeq;
using germdyn::Integer;
using germdyn::Rational;

/// a_0 .. a_(count-1) straight from the defining recursion, in plain
/// rationals, recursing on shifts.
std::vector<Rational> coefficients(const BitSeq& s, std::size_t count);

/// ord_y(g_s - g_t) + 2 from oracle coefficients: the intersection number of
/// two graph curves, or nullopt when equal below `count`.
std::optional<std::size_t> graph_intersection(const BitSeq& s, const BitSeq& t, std::size_t count);

/// ord_y Q(h(y), y): i_0(x - h(y), Q) for h(0) = 0.
std::optional<std::size_t> graph_order(const std::vector<Rational>& h, const BiPoly& q, std::size_t trunc);

/// Number of monomials outside I^n by enumerating the box [0, n a) x [0, n b).
Integer brute_colength(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& gens, unsigned n);

/// Exact number of decimal digits of a positive integer.
std::size_t digit_count(const Integer& v);

/// A sequence with s_m as first difference from 0^infinity, of various shapes.
std::vector<BitSeq> pool();

}  // namespace oracle

namespace laws {

struct Result {
  std::size_t cases = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure; }
};

Result arith(std::uint64_t seed, std::size_t cases);
Result series_ring(std::uint64_t seed, std::size_t cases);
Result local_mult_symmetry(std::uint64_t seed, std::size_t cases);
Result local_mult_multiplicativity(std::uint64_t seed, std::size_t cases);
Result recursion_holdout(std::uint64_t seed, std::size_t cases);

}  // namespace laws
