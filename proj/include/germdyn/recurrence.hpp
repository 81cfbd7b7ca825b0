#pragma once

// Detection of eventual integral linear recursions in integer sequences, and
// the growth-rate comparison mu(n) ~ c^n built on it.

#include "germdyn/arith.hpp"
#include "germdyn/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germdyn {

/// lead * s(n+k) = c_1 s(n+k-1) + ... + c_k s(n) for n >= onset.
struct RecurrenceModel {
  std::size_t order = 0;
  std::vector<Integer> coeffs;  // c_1 .. c_k
  Integer lead = 1;             // 1 exactly when the recursion is integral
  std::size_t onset = 0;

  bool integral() const { return lead == 1; }
  /// lead t^k - c_1 t^(k-1) - ... - c_k.
  UPoly<Integer> char_poly() const;
  /// s(n) from the k preceding terms; throws when lead does not divide.
  Integer predict(const std::vector<Integer>& seq, std::size_t n) const;
};

/// Smallest order in 1..max_order, then smallest onset, whose Hankel solve
/// reproduces every later term, with at least `holdout` terms beyond the
/// fitted window. All-zero input gives order 1, coefficient 0, onset 0.
RecurrenceModel detect_recursion(const std::vector<Integer>& seq, std::size_t max_order,
                                 std::size_t holdout = 1);

/// Largest real root of p, isolated by Sturm sequences.
struct RootBracket {
  Rational lo, hi;                 // root in (lo, hi]
  std::optional<Rational> exact;   // when the root is rational
};
/// nullopt when p has no real root.
std::optional<RootBracket> largest_real_root(const UPoly<Integer>& p,
                                             const Rational& width = Rational(1, 1 << 20));

struct TheoremDReport {
  std::optional<RecurrenceModel> recursion;
  std::string failure;            // empty on pass
  Rational a1, a2;                // min / max of mu(n) / c^n for n >= onset
  bool pass = false;
};

/// Throws PreconditionFailed unless mu is nonempty and c_inf > 1.
TheoremDReport theoremD_check(const std::vector<Integer>& mu, const Rational& c_inf,
                              std::size_t max_order = 3, std::size_t holdout = 1);

std::string to_string(const UPoly<Integer>& p, const char* var = "t");

}  // namespace germdyn
