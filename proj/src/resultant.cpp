#include "germdyn/bipoly.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>
#include <vector>

namespace germdyn {

namespace {

using ZPoly = UPoly<Integer>;
// Polynomial in x with coefficients in Z[y]; index = power of x.
using XPoly = std::vector<ZPoly>;

void trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer denominator_lcm(const BiPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) l = boost::multiprecision::lcm(l, denominator(c));
  return l;
}

/// The integer polynomial scale * P as an XPoly.
XPoly to_xpoly(const BiPoly& p, const Integer& scale) {
  XPoly out(p.degree_x() + 1);
  std::vector<std::vector<Integer>> rows(out.size());
  for (const auto& [m, c] : p.terms()) {
    auto& row = rows[m.i];
    if (row.size() <= m.j) row.resize(m.j + 1);
    Rational scaled = c * scale;
    row[m.j] = numerator(scaled);
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ZPoly(std::move(rows[i]));
  trim(out);
  return out;
}

BiPoly from_xpoly(const XPoly& p) {
  BiPoly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      r.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), Rational(p[i][j]));
  return r;
}

/// gcd in Z[y] of all coefficients, positive leading coefficient.
ZPoly content_x(const XPoly& p) {
  // A constant coefficient caps the content at an integer.
  if (std::any_of(p.begin(), p.end(), [](const ZPoly& c) { return c.degree() == 0; })) {
    Integer n = 0;
    for (const auto& c : p)
      if (!c.is_zero()) n = boost::multiprecision::gcd(n, content(c));
    return ZPoly(Integer(boost::multiprecision::abs(n)));
  }
  ZPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0 && g[0] == 1) break;
  }
  return g;
}

XPoly divide_exact(const XPoly& p, const ZPoly& d) {
  XPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(divide_exact(c, d));
  return r;
}

XPoly primitive_x(const XPoly& p) {
  if (p.empty()) return p;
  ZPoly c = content_x(p);
  XPoly r = divide_exact(p, c);
  if (r.back().lead() < 0)
    for (auto& q : r) q = -q;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, in Z[y][x].
XPoly pseudo_remainder(XPoly r, const XPoly& b) {
  const int db = deg(b);
  const ZPoly& lb = b.back();
  for (int k = deg(r); k >= db; --k) {
    ZPoly lead = r[k];
    for (auto& c : r) c = c * lb;
    if (!lead.is_zero())
      for (int j = 0; j <= db; ++j) r[k - db + j] -= lead * b[j];
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  trim(r);
  return r;
}

/// Res(A, L) for L = l1 x + l0: (-1)^d * sum_i a_i (-l0)^i l1^(d-i).
ZPoly resultant_with_linear(const XPoly& a, const XPoly& l) {
  const int d = deg(a);
  const ZPoly neg_l0 = -l[0];
  const ZPoly& l1 = l[1];
  std::vector<ZPoly> l1_pow(d + 1);
  l1_pow[0] = ZPoly(Integer(1));
  for (int k = 1; k <= d; ++k) l1_pow[k] = l1_pow[k - 1] * l1;
  ZPoly acc;
  ZPoly l0_pow(Integer(1));
  for (int i = 0; i <= d; ++i) {
    if (!a[i].is_zero()) acc += a[i] * l0_pow * l1_pow[d - i];
    if (i < d) l0_pow = l0_pow * neg_l0;
  }
  return d % 2 ? -acc : acc;
}

ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ZPoly(Integer(1));
  ZPoly prev(Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly v = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = divide_exact(v, prev);
      }
      m[i][k] = ZPoly();
    }
    prev = m[k][k];
  }
  ZPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

ZPoly sylvester_resultant(const XPoly& a, const XPoly& b) {
  const int da = deg(a), db = deg(b);
  const std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
  for (int i = 0; i < db; ++i)
    for (int k = 0; k <= da; ++k) m[i][i + k] = a[da - k];
  for (int i = 0; i < da; ++i)
    for (int k = 0; k <= db; ++k) m[db + i][i + k] = b[db - k];
  return bareiss_determinant(std::move(m));
}

ZPoly integer_resultant(const XPoly& a, const XPoly& b, bool allow_linear) {
  const int da = deg(a), db = deg(b);
  if (da == 0 && db == 0) return ZPoly(Integer(1));
  if (da == 0) return pow(a[0], static_cast<std::size_t>(db));
  if (db == 0) return pow(b[0], static_cast<std::size_t>(da));
  if (allow_linear) {
    if (db == 1) return resultant_with_linear(a, b);
    if (da == 1) {
      // Res(A, B) = (-1)^(da*db) Res(B, A)
      ZPoly r = resultant_with_linear(b, a);
      return db % 2 ? -r : r;
    }
  }
  return sylvester_resultant(a, b);
}

UPoly<Rational> resultant_impl(const BiPoly& p, const BiPoly& q, bool allow_linear) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant of a zero polynomial");
  Integer sp = denominator_lcm(p), sq = denominator_lcm(q);
  XPoly a = to_xpoly(p, sp), b = to_xpoly(q, sq);
  ZPoly r = integer_resultant(a, b, allow_linear);
  // Res(sp P, sq Q) = sp^deg(Q) sq^deg(P) Res(P, Q)
  Integer scale = ipow(sp, static_cast<std::uint64_t>(deg(b))) *
                  ipow(sq, static_cast<std::uint64_t>(deg(a)));
  UPoly<Rational> out = to_rational(r);
  if (scale != 1) out *= Rational(Integer(1), scale);
  return out;
}

}  // namespace

UPoly<Rational> resultant_x(const BiPoly& p, const BiPoly& q) { return resultant_impl(p, q, true); }

UPoly<Rational> resultant_x_sylvester(const BiPoly& p, const BiPoly& q) {
  return resultant_impl(p, q, false);
}

BiPoly primitive_normalized(const BiPoly& p) {
  if (p.is_zero()) return p;
  Integer l = denominator_lcm(p);
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, numerator(c * l));
  Rational factor(l, g);
  if (p.terms().rbegin()->second < 0) factor = -factor;
  return p * factor;
}

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return primitive_normalized(q);
  if (q.is_zero()) return primitive_normalized(p);
  XPoly a = to_xpoly(p, denominator_lcm(p));
  XPoly b = to_xpoly(q, denominator_lcm(q));
  ZPoly ca = content_x(a), cb = content_x(b);
  ZPoly c = gcd(ca, cb);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = XPoly{ZPoly(Integer(1))};
      break;
    }
    XPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_x(r);
  }
  XPoly g = primitive_x(a);
  for (auto& coeff : g) coeff = coeff * c;
  return primitive_normalized(from_xpoly(g));
}

BiPoly exact_quotient(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("exact_quotient: zero divisor");
  if (p.is_zero()) return p;
  Integer sp = denominator_lcm(p), sd = denominator_lcm(d);
  XPoly a = to_xpoly(p, sp), b = to_xpoly(d, sd);
  if (deg(a) < deg(b)) throw PreconditionFailed("exact_quotient: divisor does not divide");
  // Long division over Q(y): quotient coefficients must come out in Q[y].
  std::vector<UPoly<Rational>> r;
  for (const auto& c : a) r.push_back(to_rational(c));
  std::vector<UPoly<Rational>> bq;
  for (const auto& c : b) bq.push_back(to_rational(c));
  const int db = deg(b);
  std::vector<UPoly<Rational>> quot(static_cast<std::size_t>(deg(a) - db + 1));
  for (int k = deg(a); k >= db; --k) {
    if (r[k].is_zero()) continue;
    auto [qk, rem] = divmod(r[k], bq[db]);
    if (!rem.is_zero()) throw PreconditionFailed("exact_quotient: divisor does not divide");
    for (int j = 0; j <= db; ++j) r[k - db + j] -= qk * bq[j];
    quot[k - db] = std::move(qk);
  }
  for (int k = 0; k < db; ++k)
    if (!r[k].is_zero()) throw PreconditionFailed("exact_quotient: divisor does not divide");
  BiPoly out;
  for (std::size_t i = 0; i < quot.size(); ++i)
    for (std::size_t j = 0; j < quot[i].size(); ++j)
      out.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), quot[i][j]);
  // P / D = (sd / sp) * (a / b)
  return out * Rational(sd, sp);
}

}  // namespace germdyn
