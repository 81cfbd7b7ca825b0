#include "germdyn/arith.hpp"

#include "germdyn/errors.hpp"

#include <cctype>
#include <ostream>

namespace germdyn {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) throw ParseError("expected a decimal integer", 0);
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!is_decimal(den_text) || den_text[0] == '-') throw ParseError("bad denominator", slash + 1);
  Integer den = parse_integer(den_text);
  if (den.is_zero()) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  Integer den = denominator(v);
  if (den == 1) return numerator(v).str();
  return numerator(v).str() + "/" + den.str();
}

Integer pow2(std::uint64_t k) {
  Integer r = 1;
  return r << k;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::size_t decimal_digits(const Integer& v) {
  if (v.is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one, so settle it against a power of ten.
  Integer a = boost::multiprecision::abs(v);
  std::size_t guess = mpz_sizeinbase(a.backend().data(), 10);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.backend().data(), 10, guess - 1);
  return a >= ten_pow ? guess : guess - 1;
}

Dyadic::Dyadic(long value) : num_(value) {}

Dyadic::Dyadic(Integer numerator, std::uint64_t exp2) : num_(std::move(numerator)), exp_(exp2) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  std::uint64_t tz = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
  std::uint64_t shift = tz < exp_ ? tz : exp_;
  if (shift) {
    num_ >>= shift;
    exp_ -= shift;
  }
}

Rational Dyadic::to_rational() const { return Rational(num_, pow2(exp_)); }

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (exp_ == other.exp_) {
    num_ += other.num_;
  } else if (exp_ > other.exp_) {
    num_ += other.num_ << (exp_ - other.exp_);
  } else {
    num_ = (num_ << (other.exp_ - exp_)) + other.num_;
    exp_ = other.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  num_ *= other.num_;
  exp_ += other.exp_;
  normalize();
  return *this;
}

Dyadic abs(const Dyadic& a) { return a.sign() < 0 ? -a : a; }

Dyadic halve(const Dyadic& a, int sign) {
  if (a.is_zero()) return a;
  Integer n = sign < 0 ? Integer(-a.numerator()) : a.numerator();
  return Dyadic(std::move(n), a.exponent() + 1);
}

bool abs_leq(const Dyadic& a, const Rational& q) {
  if (q < 0) throw PreconditionFailed("abs_leq: bound must be nonnegative");
  // |n| / 2^k <= p / d  <=>  |n| * d <= p * 2^k
  Integer lhs = boost::multiprecision::abs(a.numerator()) * denominator(q);
  Integer rhs = numerator(q) << a.exponent();
  return lhs <= rhs;
}

std::string to_string(const Dyadic& d) {
  if (d.exponent() == 0) return d.numerator().str();
  return d.numerator().str() + "/2^" + std::to_string(d.exponent());
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << to_string(d); }

}  // namespace germdyn
