#pragma once

// Sparse bivariate polynomials in x, y with exact rational coefficients, and
// the elimination tools built on them (resultants and gcds).

#include "germdyn/arith.hpp"
#include "germdyn/upoly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace germdyn {

/// Guardrail on the number of stored terms produced by a single operation.
inline constexpr std::size_t kDefaultTermBudget = 1'000'000;

/// Exponent pair of the monomial x^i y^j.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  auto operator<=>(const Monomial&) const = default;
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(Rational c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(std::uint32_t i, std::uint32_t j, Rational c = 1);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(std::uint32_t i, std::uint32_t j) const;
  Rational constant_term() const { return coeff(0, 0); }

  /// Total degree; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  /// Lowest total degree of a term; nullopt stands for +infinity (zero polynomial).
  std::optional<std::uint32_t> order() const;
  /// Degree in x (resp. y); -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;

  void add_term(std::uint32_t i, std::uint32_t j, const Rational& c);

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  BiPoly& operator*=(const BiPoly& o);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Product refusing results with more than `term_budget` terms.
BiPoly mul(const BiPoly& a, const BiPoly& b, std::size_t term_budget = kDefaultTermBudget);
BiPoly pow(const BiPoly& p, unsigned k, std::size_t term_budget = kDefaultTermBudget);

/// P(F1(x,y), F2(x,y)).
BiPoly compose(const BiPoly& p, const BiPoly& f1, const BiPoly& f2,
               std::size_t term_budget = kDefaultTermBudget);

/// P(x, 0) as a polynomial in x.
UPoly<Rational> restrict_y0(const BiPoly& p);
/// Coefficient of x^k as a polynomial in y.
UPoly<Rational> coefficient_in_x(const BiPoly& p, std::uint32_t k);

/// Sylvester resultant eliminating x, a polynomial in y. Fraction-free
/// (Bareiss) elimination over integer-cleared coefficients, with a closed form
/// when either input is linear in x. Throws ZeroPolynomial on zero input.
UPoly<Rational> resultant_x(const BiPoly& p, const BiPoly& q);

/// Same, but forcing Sylvester + Bareiss even for linear inputs.
UPoly<Rational> resultant_x_sylvester(const BiPoly& p, const BiPoly& q);

/// Greatest common divisor over Q: integer primitive with positive leading
/// term (largest monomial). gcd(P, 0) is P normalized; gcd(0, 0) is 0.
BiPoly gcd(const BiPoly& p, const BiPoly& q);

/// P / D; throws PreconditionFailed when D does not divide P.
BiPoly exact_quotient(const BiPoly& p, const BiPoly& d);

/// Scale to integer coefficients with gcd 1 and positive leading term.
BiPoly primitive_normalized(const BiPoly& p);

std::string to_string(const BiPoly& p);

}  // namespace germdyn
