#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP through
// boost::multiprecision) and the dyadic rationals n / 2^k that carry the
// curve-family coefficients.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace germdyn {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Integer parse_integer(std::string_view text);
/// Accepts "p", "-p" and "p/q"; the result is reduced.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

Integer pow2(std::uint64_t k);
Integer ipow(const Integer& base, std::uint64_t exponent);
/// Number of decimal digits of |v|; 1 for zero.
std::size_t decimal_digits(const Integer& v);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// An exact rational num / 2^exp.
///
/// Always normalized: the numerator is odd, or it is zero and exp == 0. Two
/// dyadics are equal iff their representations are equal.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  Dyadic(Integer numerator, std::uint64_t exp2);

  const Integer& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  Rational to_rational() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }

 private:
  void normalize();

  Integer num_;
  std::uint64_t exp_ = 0;
};

inline Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
inline Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
inline Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

Dyadic abs(const Dyadic& a);

/// sign * a / 2 with sign = +1 or -1.
Dyadic halve(const Dyadic& a, int sign);

/// |a| <= q, decided by integer cross-multiplication. Requires q >= 0.
bool abs_leq(const Dyadic& a, const Rational& q);

/// "num/2^k", or "num" when k == 0.
std::string to_string(const Dyadic& d);
std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace germdyn
