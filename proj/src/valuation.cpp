#include "germdyn/valuation.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>

namespace germdyn {

MonomialValuation::MonomialValuation(Rational s, Rational t) : s_(std::move(s)), t_(std::move(t)) {
  if (s_ <= 0 || t_ <= 0) throw PreconditionFailed("valuation weights must be positive");
  if (std::min(s_, t_) != 1) throw PreconditionFailed("valuation weights must have min(s, t) = 1");
}

MonomialValuation MonomialValuation::normalized(const Rational& s, const Rational& t) {
  if (s <= 0 || t <= 0) throw PreconditionFailed("valuation weights must be positive");
  Rational m = std::min(s, t);
  return MonomialValuation(s / m, t / m);
}

Rational val_eval(const MonomialValuation& nu, const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
  std::optional<Rational> best;
  for (const auto& [m, c] : p.terms()) {
    Rational v = nu.s() * m.i + nu.t() * m.j;
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational attraction_rate(const MapGerm& f, const MonomialValuation& nu) {
  return std::min(val_eval(nu, f.first()), val_eval(nu, f.second()));
}

MapGerm compose(const MapGerm& f, const MapGerm& g, std::size_t term_budget) {
  return MapGerm(compose(f.first(), g.first(), g.second(), term_budget),
                 compose(f.second(), g.first(), g.second(), term_budget));
}

std::vector<Rational> c_sequence(const MapGerm& f, const MonomialValuation& nu, unsigned n_max,
                                 std::size_t term_budget) {
  std::vector<Rational> out;
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  for (unsigned n = 1; n <= n_max; ++n) {
    try {
      BiPoly nx = compose(f.first(), x, y, term_budget);
      BiPoly ny = compose(f.second(), x, y, term_budget);
      x = std::move(nx);
      y = std::move(ny);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), n - 1);
    }
    out.push_back(std::min(val_eval(nu, x), val_eval(nu, y)));
  }
  return out;
}

CInfinity c_infinity(const MapGerm& f, unsigned n_max, std::size_t max_order, std::size_t holdout,
                     std::size_t term_budget) {
  if (n_max < 3) throw PreconditionFailed("c_infinity needs n_max >= 3");
  CInfinity r;
  for (const auto& c : c_sequence(f, MonomialValuation::ord(), n_max, term_budget))
    r.sequence.push_back(numerator(c));
  std::size_t order = std::min<std::size_t>(max_order, (n_max - std::min<std::size_t>(n_max, holdout)) / 2);
  try {
    if (order < 1) throw NoRecurrenceFound("sequence too short");
    r.recursion = detect_recursion(r.sequence, order, holdout);
  } catch (const NoRecurrenceFound& e) {
    r.note = e.what();
    r.fallback_value = r.sequence.back();
    r.fallback_root = n_max;
    return r;
  }
  r.bracket = largest_real_root(r.recursion->char_poly());
  if (r.bracket) r.value = r.bracket->exact;
  return r;
}

}  // namespace germdyn
