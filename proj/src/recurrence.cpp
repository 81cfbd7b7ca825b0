#include "germdyn/recurrence.hpp"

#include "germdyn/errors.hpp"
#include "germdyn/linalg.hpp"

#include <algorithm>

namespace germdyn {

UPoly<Integer> RecurrenceModel::char_poly() const {
  std::vector<Integer> c(order + 1);
  c[order] = lead;
  for (std::size_t i = 0; i < order; ++i) c[order - 1 - i] = -coeffs[i];
  return UPoly<Integer>(std::move(c));
}

Integer RecurrenceModel::predict(const std::vector<Integer>& seq, std::size_t n) const {
  if (n < order) throw PreconditionFailed("predict needs order preceding terms");
  Integer acc = 0;
  for (std::size_t i = 0; i < order; ++i) acc += coeffs[i] * seq[n - 1 - i];
  if (acc % lead != 0) throw PreconditionFailed("recursion does not give an integer here");
  return acc / lead;
}

namespace {

std::optional<RecurrenceModel> fit(const std::vector<Integer>& seq, std::size_t k, std::size_t n0) {
  RationalMatrix h(k, k);
  RationalMatrix rhs(k, 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) h(r, i) = Rational(seq[n0 + k + r - 1 - i]);
    rhs(r, 0) = Rational(seq[n0 + k + r]);
  }
  auto sol = solve(h, rhs);
  if (!sol) return std::nullopt;
  Integer l = 1;
  for (std::size_t i = 0; i < k; ++i) l = boost::multiprecision::lcm(l, denominator((*sol)(i, 0)));
  RecurrenceModel m;
  m.order = k;
  m.onset = n0;
  m.lead = l;
  for (std::size_t i = 0; i < k; ++i) m.coeffs.push_back(numerator((*sol)(i, 0) * l));
  return m;
}

bool reproduces(const RecurrenceModel& m, const std::vector<Integer>& seq) {
  for (std::size_t n = m.onset + m.order; n < seq.size(); ++n) {
    Integer acc = 0;
    for (std::size_t i = 0; i < m.order; ++i) acc += m.coeffs[i] * seq[n - 1 - i];
    if (acc != m.lead * seq[n]) return false;
  }
  return true;
}

}  // namespace

RecurrenceModel detect_recursion(const std::vector<Integer>& seq, std::size_t max_order,
                                 std::size_t holdout) {
  if (max_order < 1) throw PreconditionFailed("max_order must be at least 1");
  if (seq.size() < 2 * max_order + holdout)
    throw PreconditionFailed("sequence of length " + std::to_string(seq.size()) +
                             " too short for order " + std::to_string(max_order) +
                             " with holdout " + std::to_string(holdout));
  if (std::all_of(seq.begin(), seq.end(), [](const Integer& v) { return v == 0; })) {
    RecurrenceModel m;
    m.order = 1;
    m.coeffs = {Integer(0)};
    return m;
  }
  for (std::size_t k = 1; k <= max_order; ++k) {
    for (std::size_t n0 = 0; n0 + 2 * k + holdout <= seq.size(); ++n0) {
      auto m = fit(seq, k, n0);
      if (m && reproduces(*m, seq)) return *m;
    }
  }
  throw NoRecurrenceFound("no recursion of order <= " + std::to_string(max_order) +
                          " with holdout " + std::to_string(holdout));
}

namespace {

using QPoly = UPoly<Rational>;

int sign_at(const QPoly& p, const Rational& x) {
  Rational v = p.eval(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Distinct real roots in (a, b].
int roots_between(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

}  // namespace

std::optional<RootBracket> largest_real_root(const UPoly<Integer>& p, const Rational& width) {
  if (p.degree() < 1) return std::nullopt;
  QPoly q = to_rational(p);
  QPoly g = gcd(q, derivative(q));
  if (g.degree() > 0) q = divmod(q, g).first;
  std::vector<QPoly> chain{q, derivative(q)};
  while (chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  // Cauchy bound: every root has |x| < 1 + max |a_i / a_n|.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    bound = std::max(bound, Rational(boost::multiprecision::abs(q[i] / q.lead())));
  bound += 1;
  Rational lo = -bound, hi = bound;
  if (roots_between(chain, lo, hi) == 0) return std::nullopt;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (roots_between(chain, mid, hi) > 0) lo = mid;
    else hi = mid;
  }
  RootBracket out{lo, hi, std::nullopt};
  // Rational roots p/q of p have q dividing the leading coefficient.
  Integer lead = boost::multiprecision::abs(p.lead());
  if (lead <= 1'000'000) {
    for (Integer d = 1; d <= lead && !out.exact; ++d) {
      if (lead % d != 0) continue;
      Rational scaled_lo = lo * d;
      Integer first = numerator(scaled_lo) / denominator(scaled_lo);
      for (Integer num = first - 1; Rational(num, d) <= hi; ++num) {
        Rational cand(num, d);
        if (cand > lo && cand <= hi && q.eval(cand) == 0) {
          out.exact = cand;
          break;
        }
      }
    }
  }
  return out;
}

TheoremDReport theoremD_check(const std::vector<Integer>& mu, const Rational& c_inf,
                              std::size_t max_order, std::size_t holdout) {
  if (mu.empty()) throw PreconditionFailed("theoremD_check needs a nonempty mu sequence");
  if (c_inf <= 1) throw PreconditionFailed("theoremD_check needs c_inf > 1");
  TheoremDReport r;
  std::size_t order = std::min(max_order, (mu.size() - std::min(mu.size(), holdout)) / 2);
  if (order < 1) {
    r.failure = "sequence too short for recursion detection";
    return r;
  }
  try {
    r.recursion = detect_recursion(mu, order, holdout);
  } catch (const NoRecurrenceFound& e) {
    r.failure = e.what();
    return r;
  }
  Rational cn = 1;
  bool first = true;
  for (std::size_t n = 0; n < mu.size(); ++n) {
    if (n > 0) cn *= c_inf;
    if (n < r.recursion->onset) continue;
    if (mu[n] <= 0) {
      r.failure = "mu(" + std::to_string(n) + ") is not positive";
      return r;
    }
    Rational ratio = Rational(mu[n]) / cn;
    if (first || ratio < r.a1) r.a1 = ratio;
    if (first || ratio > r.a2) r.a2 = ratio;
    first = false;
  }
  if (to_rational(r.recursion->char_poly()).eval(c_inf) != 0) {
    r.failure = "c_inf = " + to_string(c_inf) + " is not a root of " +
                to_string(r.recursion->char_poly());
    return r;
  }
  r.pass = true;
  return r;
}

std::string to_string(const UPoly<Integer>& p, const char* var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer a = boost::multiprecision::abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0) out += a.str();
    if (k > 0) {
      if (a != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace germdyn
