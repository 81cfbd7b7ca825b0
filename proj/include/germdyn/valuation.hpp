#pragma once

// Monomial valuations and attraction rates c(f^n, nu) of polynomial map germs.

#include "germdyn/intersect.hpp"
#include "germdyn/recurrence.hpp"

#include <optional>
#include <vector>

namespace germdyn {

/// nu(x^i y^j) = s i + t j, normalized so that min(s, t) = 1.
class MonomialValuation {
 public:
  /// Throws PreconditionFailed unless s, t > 0 and min(s, t) = 1.
  MonomialValuation(Rational s, Rational t);
  /// Rescales positive weights to min(s, t) = 1.
  static MonomialValuation normalized(const Rational& s, const Rational& t);
  static MonomialValuation ord() { return {1, 1}; }

  const Rational& s() const noexcept { return s_; }
  const Rational& t() const noexcept { return t_; }

 private:
  Rational s_, t_;
};

/// min over the support of P of s i + t j. Throws ZeroPolynomial for P = 0.
Rational val_eval(const MonomialValuation& nu, const BiPoly& p);

/// min(nu(x o F), nu(y o F)).
Rational attraction_rate(const MapGerm& f, const MonomialValuation& nu);

/// F o G, i.e. (F1(G1, G2), F2(G1, G2)).
MapGerm compose(const MapGerm& f, const MapGerm& g, std::size_t term_budget = kDefaultTermBudget);

/// c(f^n, nu) for n = 1..n_max. BudgetExceeded carries the last completed n.
std::vector<Rational> c_sequence(const MapGerm& f, const MonomialValuation& nu, unsigned n_max,
                                 std::size_t term_budget = kDefaultTermBudget);

struct CInfinity {
  std::vector<Integer> sequence;           // c(f^n, ord), n = 1..n_max
  std::optional<RecurrenceModel> recursion;
  std::optional<Rational> value;           // the dominant root, when rational
  std::optional<RootBracket> bracket;      // isolating interval of the dominant root
  std::string note;                        // why no recursion was found, if so
  /// Without a recursion: c_inf is bracketed by the n_max-th root of this value.
  Integer fallback_value = 0;
  unsigned fallback_root = 0;
};

/// Asymptotic attraction rate from a recursion in c(f^n, ord).
CInfinity c_infinity(const MapGerm& f, unsigned n_max, std::size_t max_order = 3,
                     std::size_t holdout = 1, std::size_t term_budget = kDefaultTermBudget);

}  // namespace germdyn
