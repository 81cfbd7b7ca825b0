#pragma once

// Dense univariate polynomials over an exact scalar (Integer or Rational).

#include "germdyn/arith.hpp"
#include "germdyn/errors.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace germdyn {

template <class Scalar>
class UPoly {
 public:
  UPoly() = default;
  UPoly(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(Scalar c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }

  const Scalar& operator[](std::size_t k) const {
    static const Scalar zero{0};
    return k < c_.size() ? c_[k] : zero;
  }
  const Scalar& lead() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }

  /// Lowest exponent with nonzero coefficient; nullopt (+infinity) for zero.
  std::optional<std::size_t> ord() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) return k;
    return std::nullopt;
  }

  Scalar eval(const Scalar& x) const {
    Scalar acc{0};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Multiply by t^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(k, Scalar{0});
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

template <class Scalar>
UPoly<Scalar> derivative(const UPoly<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Scalar(static_cast<long>(k));
  return UPoly<Scalar>(std::move(d));
}

template <class Scalar>
UPoly<Scalar> pow(UPoly<Scalar> base, std::size_t e) {
  UPoly<Scalar> result(Scalar{1});
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

// ---- Z[t] ---------------------------------------------------------------

/// gcd of the coefficients, carrying the sign of the leading coefficient.
/// Zero for the zero polynomial.
Integer content(const UPoly<Integer>& p);
UPoly<Integer> primitive_part(const UPoly<Integer>& p);
/// Division by a nonzero integer that must be exact.
UPoly<Integer> divide_exact(const UPoly<Integer>& a, const Integer& c);
/// Division in Z[t] that must be exact; throws PreconditionFailed otherwise.
UPoly<Integer> divide_exact(const UPoly<Integer>& a, const UPoly<Integer>& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly<Integer> pseudo_remainder(const UPoly<Integer>& a, const UPoly<Integer>& b);
/// Greatest common divisor in Z[t] with positive leading coefficient.
UPoly<Integer> gcd(const UPoly<Integer>& a, const UPoly<Integer>& b);

// ---- Q[t] ---------------------------------------------------------------

std::pair<UPoly<Rational>, UPoly<Rational>> divmod(const UPoly<Rational>& a,
                                                   const UPoly<Rational>& b);
/// Monic gcd over Q; zero only when both inputs are zero.
UPoly<Rational> gcd(const UPoly<Rational>& a, const UPoly<Rational>& b);

UPoly<Rational> to_rational(const UPoly<Integer>& p);

}  // namespace germdyn
