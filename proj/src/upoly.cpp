#include "germdyn/upoly.hpp"

#include <algorithm>

namespace germdyn {

Integer content(const UPoly<Integer>& p) {
  if (p.is_zero()) return 0;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return p.lead() < 0 ? Integer(-g) : g;
}

UPoly<Integer> primitive_part(const UPoly<Integer>& p) {
  if (p.is_zero()) return p;
  return divide_exact(p, content(p));
}

UPoly<Integer> divide_exact(const UPoly<Integer>& a, const Integer& c) {
  if (c == 0) throw PreconditionFailed("divide_exact: division by zero");
  if (c == 1) return a;
  std::vector<Integer> v(a.coefficients());
  for (auto& x : v) {
    Integer q, r;
    boost::multiprecision::divide_qr(x, c, q, r);
    if (r != 0) throw PreconditionFailed("divide_exact: integer division is not exact");
    x = std::move(q);
  }
  return UPoly<Integer>(std::move(v));
}

UPoly<Integer> divide_exact(const UPoly<Integer>& a, const UPoly<Integer>& b) {
  if (b.is_zero()) throw PreconditionFailed("divide_exact: division by zero polynomial");
  if (b.degree() == 0) return divide_exact(a, b[0]);
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  const Integer& lb = b.lead();
  int dr = a.degree();
  if (dr < db) {
    if (dr >= 0) throw PreconditionFailed("divide_exact: polynomial division is not exact");
    return {};
  }
  std::vector<Integer> q(static_cast<std::size_t>(dr - db + 1));
  for (int k = dr; k >= db; --k) {
    if (r[k] == 0) continue;
    Integer qk, rem;
    boost::multiprecision::divide_qr(r[k], lb, qk, rem);
    if (rem != 0) throw PreconditionFailed("divide_exact: polynomial division is not exact");
    for (int j = 0; j <= db; ++j) r[k - db + j] -= qk * b[j];
    q[k - db] = std::move(qk);
  }
  for (int k = 0; k < db; ++k)
    if (r[k] != 0) throw PreconditionFailed("divide_exact: polynomial division is not exact");
  return UPoly<Integer>(std::move(q));
}

UPoly<Integer> pseudo_remainder(const UPoly<Integer>& a, const UPoly<Integer>& b) {
  if (b.is_zero()) throw PreconditionFailed("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Integer lead = r[k];
    for (auto& x : r) x *= lb;
    if (lead != 0)
      for (int j = 0; j <= db; ++j) r[k - db + j] -= lead * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return UPoly<Integer>(std::move(r));
}

UPoly<Integer> gcd(const UPoly<Integer>& a, const UPoly<Integer>& b) {
  if (a.is_zero()) return primitive_part(b) * Integer(boost::multiprecision::abs(content(b)));
  if (b.is_zero()) return primitive_part(a) * Integer(boost::multiprecision::abs(content(a)));
  // Pull out the common power of t first; it is often all there is.
  const std::size_t oa = *a.ord(), ob = *b.ord();
  if (oa > 0 || ob > 0) {
    auto strip = [](const UPoly<Integer>& p, std::size_t k) {
      return UPoly<Integer>(std::vector<Integer>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(k),
                                                 p.coefficients().end()));
    };
    return gcd(strip(a, oa), strip(b, ob)).shifted(std::min(oa, ob));
  }
  Integer c = boost::multiprecision::gcd(content(a), content(b));
  c = boost::multiprecision::abs(c);
  if (a.degree() == 0 || b.degree() == 0) return UPoly<Integer>(c);
  UPoly<Integer> u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    UPoly<Integer> r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : primitive_part(r);
  }
  u = primitive_part(u);
  if (u.lead() < 0) u = -u;
  return u * c;
}

std::pair<UPoly<Rational>, UPoly<Rational>> divmod(const UPoly<Rational>& a,
                                                   const UPoly<Rational>& b) {
  if (b.is_zero()) throw PreconditionFailed("divmod: zero divisor");
  std::vector<Rational> r(a.coefficients());
  const int db = b.degree();
  if (a.degree() < db) return {UPoly<Rational>(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational qk = r[k] / lb;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= qk * b[j];
    q[k - db] = std::move(qk);
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly<Rational>(std::move(q)), UPoly<Rational>(std::move(r))};
}

UPoly<Rational> gcd(const UPoly<Rational>& a, const UPoly<Rational>& b) {
  UPoly<Rational> u = a, v = b;
  while (!v.is_zero()) {
    auto r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * Rational(Rational(1) / u.lead());
}

UPoly<Rational> to_rational(const UPoly<Integer>& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return UPoly<Rational>(std::move(v));
}

}  // namespace germdyn
