#include "germdyn/intersect.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>

namespace germdyn {

namespace {

BiPoly partial_x(const BiPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.i > 0) r.add_term(m.i - 1, m.j, c * Rational(m.i));
  return r;
}

BiPoly partial_y(const BiPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p.terms())
    if (m.j > 0) r.add_term(m.i, m.j - 1, c * Rational(m.j));
  return r;
}

bool is_constant(const UPoly<Rational>& p) { return p.degree() == 0; }

/// ord_y Res_x(P, Q) when the coordinates provably localize it at 0.
std::optional<Integer> certified_value(const BiPoly& p, const BiPoly& q) {
  const int dp = p.degree_x(), dq = q.degree_x();
  if (dp < 1 || dq < 1) return std::nullopt;
  if (!is_constant(coefficient_in_x(p, dp)) || !is_constant(coefficient_in_x(q, dq)))
    return std::nullopt;
  UPoly<Rational> g0 = gcd(restrict_y0(p), restrict_y0(q));
  if (g0.is_zero() || g0 != UPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(g0.degree())))
    return std::nullopt;
  auto ord = resultant_x(p, q).ord();
  if (!ord) return std::nullopt;
  return Integer(*ord);
}

/// ord_y Res_x(P, Q) for x-regular inputs, without a localization proof.
std::optional<Integer> trial_value(const BiPoly& p, const BiPoly& q) {
  if (p.degree_x() < 1 || q.degree_x() < 1) return std::nullopt;
  if (restrict_y0(p).is_zero() || restrict_y0(q).is_zero()) return std::nullopt;
  auto ord = resultant_x(p, q).ord();
  if (!ord) return std::nullopt;
  return Integer(*ord);
}

}  // namespace

PlaneCurve::PlaneCurve(BiPoly f, bool reduce) : f_(std::move(f)) {
  if (f_.is_zero()) throw DegenerateInput("curve equation is zero");
  if (f_.constant_term() != 0) throw DegenerateInput("curve does not pass through the origin");
  if (reduce) {
    BiPoly g = gcd(f_, gcd(partial_x(f_), partial_y(f_)));
    if (g.degree().value_or(0) > 0) f_ = exact_quotient(f_, g);
    f_ = primitive_normalized(f_);
    reduced_ = true;
  }
}

MapGerm::MapGerm(BiPoly f1, BiPoly f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (f1_.constant_term() != 0 || f2_.constant_term() != 0)
    throw DegenerateInput("map does not fix the origin");
}

MapGerm::Certificate MapGerm::finiteness_certificate() const {
  if (f1_.is_zero() || f2_.is_zero()) return {false, "a component is identically zero"};
  BiPoly g = gcd(f1_, f2_);
  if (g.degree().value_or(0) > 0) return {false, "components share the factor " + to_string(g)};
  if (resultant_x(f1_, f2_).is_zero()) return {false, "resultant of the components vanishes"};
  return {true, "coprime components, nonzero resultant"};
}

std::pair<BiPoly, BiPoly> MapGerm::iterate(unsigned n, std::size_t term_budget) const {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  for (unsigned k = 0; k < n; ++k) {
    BiPoly nx = compose(f1_, x, y, term_budget);
    BiPoly ny = compose(f2_, x, y, term_budget);
    x = std::move(nx);
    y = std::move(ny);
  }
  return {x, y};
}

GenericSampler::GenericSampler(std::uint64_t seed, std::int64_t bound)
    : seed_(seed), bound_(bound), rng_(seed) {
  if (bound < 1) throw PreconditionFailed("sampler bound must be positive");
}

Integer GenericSampler::draw() {
  std::uniform_int_distribution<std::int64_t> dist(-bound_, bound_);
  std::int64_t v = 0;
  while (v == 0) v = dist(rng_);
  return Integer(v);
}

std::vector<Integer> GenericSampler::draw(std::size_t k) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(draw());
  return out;
}

LocalMult local_mult(const BiPoly& p0, const BiPoly& q0, GenericSampler& sampler) {
  if (p0.is_zero() || q0.is_zero()) throw DegenerateInput("local_mult of a zero polynomial");
  LocalMult r;
  if (p0.constant_term() != 0 || q0.constant_term() != 0) {
    r.certified = true;
    return r;
  }
  BiPoly p = p0, q = q0;
  BiPoly g = gcd(p, q);
  if (g.degree().value_or(0) > 0) {
    if (g.constant_term() == 0) {
      r.value = Multiplicity::infinite();
      r.certified = true;
      return r;
    }
    // A common factor not through the origin is a unit there.
    p = exact_quotient(p, g);
    q = exact_quotient(q, g);
  }
  if (auto v = certified_value(p, q)) {
    r.value = Multiplicity::exact(*v);
    r.certified = true;
    return r;
  }
  std::vector<Integer> seen;
  for (unsigned d = 1; d <= 5; ++d) {
    r.draws = d;
    Rational a(sampler.draw()), b(sampler.draw());
    BiPoly nx = BiPoly::x() * (1 + a * b) + BiPoly::y() * a;
    BiPoly ny = BiPoly::x() * b + BiPoly::y();
    BiPoly pa = compose(p, nx, ny), qa = compose(q, nx, ny);
    if (auto v = certified_value(pa, qa)) {
      r.value = Multiplicity::exact(*v);
      r.certified = true;
      return r;
    }
    auto v = trial_value(pa, qa);
    if (!v) continue;
    if (std::find(seen.begin(), seen.end(), *v) != seen.end()) {
      r.value = Multiplicity::exact(*v);
      return r;
    }
    seen.push_back(*v);
  }
  if (seen.empty()) throw GenericityFailure("no usable coordinate change in 5 draws");
  r.value = Multiplicity::exact(*std::min_element(seen.begin(), seen.end()));
  r.warning = true;
  return r;
}

PlaneCurve pullback(const MapGerm& f, const PlaneCurve& c, std::size_t term_budget) {
  return PlaneCurve(compose(c.equation(), f.first(), f.second(), term_budget));
}

BiPoly generic_member(const std::vector<BiPoly>& generators, const std::vector<Integer>& z) {
  if (generators.size() != z.size())
    throw PreconditionFailed("coefficient vector does not match the generators");
  BiPoly r;
  for (std::size_t i = 0; i < z.size(); ++i) r += generators[i] * Rational(z[i]);
  return r;
}

MuSequence mu_sequence(const MapGerm& f, const std::vector<BiPoly>& generators,
                       std::vector<Integer> z, std::vector<Integer> w, unsigned n_max,
                       GenericSampler& sampler, std::size_t term_budget) {
  if (generators.empty()) throw PreconditionFailed("mu_sequence needs generators");
  MuSequence out;
  out.z = z.empty() ? sampler.draw(generators.size()) : std::move(z);
  out.w = w.empty() ? sampler.draw(generators.size()) : std::move(w);
  BiPoly dz = generic_member(generators, out.z);
  BiPoly dw = generic_member(generators, out.w);
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  for (unsigned n = 0; n <= n_max; ++n) {
    BiPoly pulled;
    try {
      if (n > 0) {
        BiPoly nx = compose(f.first(), x, y, term_budget);
        BiPoly ny = compose(f.second(), x, y, term_budget);
        x = std::move(nx);
        y = std::move(ny);
      }
      pulled = compose(dz, x, y, term_budget);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), n);
    }
    LocalMult m = local_mult(pulled, dw, sampler);
    out.certified = out.certified && m.certified;
    out.warning = out.warning || m.warning;
    if (m.value.is_infinite()) {
      out.infinite_at = n;
      break;
    }
    out.mu.push_back(m.value.value());
  }
  return out;
}

Integer samuel_via_generic(const std::vector<BiPoly>& generators, GenericSampler& sampler,
                           unsigned trials) {
  if (trials < 1) throw PreconditionFailed("samuel_via_generic needs at least one trial");
  std::optional<Integer> common;
  for (unsigned k = 0; k < trials; ++k) {
    BiPoly p = generic_member(generators, sampler.draw(generators.size()));
    BiPoly q = generic_member(generators, sampler.draw(generators.size()));
    LocalMult m = local_mult(p, q, sampler);
    if (m.value.is_infinite())
      throw GenericityFailure("generic members share a component: ideal is not m-primary");
    if (common && *common != m.value.value())
      throw GenericityFailure("generic trials disagree: " + common->str() + " vs " +
                              m.value.value().str());
    common = m.value.value();
  }
  return *common;
}

}  // namespace germdyn
