#pragma once

// Truncated univariate power series over an exact scalar.
//
// A USeries<S> with truncation order N knows the coefficients of y^k exactly
// for k < N and nothing beyond. Arithmetic keeps every emitted coefficient
// exact and shrinks N to what is provable.

#include "germdyn/arith.hpp"
#include "germdyn/bounds.hpp"
#include "germdyn/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace germdyn {

/// Truncation orders at which Dyadic products switch to the Kronecker path.
inline constexpr std::size_t kSubquadraticThreshold = 4096;

enum class MulAlgorithm { automatic, schoolbook, subquadratic };

template <class Scalar>
class USeries {
 public:
  USeries() = default;
  /// The zero series known to order `trunc`.
  explicit USeries(std::size_t trunc) : c_(trunc) {}
  /// Coefficients of y^0 .. y^(n-1); truncation order n.
  explicit USeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  static USeries constant(Scalar c, std::size_t trunc) {
    USeries s(trunc);
    if (trunc > 0) s.c_[0] = std::move(c);
    return s;
  }

  std::size_t trunc() const noexcept { return c_.size(); }
  const Scalar& operator[](std::size_t k) const { return c_.at(k); }
  Scalar& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }

  friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Scalar> c_;
};

template <class Scalar>
TruncOrder ord(const USeries<Scalar>& a) {
  for (std::size_t k = 0; k < a.trunc(); ++k)
    if (a[k] != Scalar{0}) return TruncOrder::exact(k);
  return TruncOrder::at_least(a.trunc());
}

template <class Scalar>
USeries<Scalar> operator+(const USeries<Scalar>& a, const USeries<Scalar>& b) {
  std::size_t n = std::min(a.trunc(), b.trunc());
  std::vector<Scalar> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] + b[k];
  return USeries<Scalar>(std::move(v));
}

template <class Scalar>
USeries<Scalar> operator-(const USeries<Scalar>& a) {
  std::vector<Scalar> v(a.coefficients());
  for (auto& c : v) c = -c;
  return USeries<Scalar>(std::move(v));
}

template <class Scalar>
USeries<Scalar> operator-(const USeries<Scalar>& a, const USeries<Scalar>& b) {
  return a + (-b);
}

/// Truncation order of a product: min(N1 + ord b, N2 + ord a), where an
/// undetermined order counts as its lower bound.
template <class Scalar>
std::size_t product_trunc(const USeries<Scalar>& a, const USeries<Scalar>& b) {
  return std::min(a.trunc() + ord(b).value, b.trunc() + ord(a).value);
}

namespace detail {

template <class Scalar>
std::vector<Scalar> convolve_schoolbook(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                        std::size_t n) {
  std::vector<Scalar> r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == Scalar{0}) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j] == Scalar{0}) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

/// Kronecker-substitution product of dyadic coefficient vectors: scale to
/// integers, pack into one big integer per operand, multiply once, unpack.
/// Bit-for-bit identical to the schoolbook result.
std::vector<Dyadic> convolve_kronecker(const std::vector<Dyadic>& a, const std::vector<Dyadic>& b,
                                       std::size_t n);

}  // namespace detail

template <class Scalar>
USeries<Scalar> mul(const USeries<Scalar>& a, const USeries<Scalar>& b,
                    MulAlgorithm algorithm = MulAlgorithm::automatic) {
  const std::size_t n = product_trunc(a, b);
  if constexpr (std::is_same_v<Scalar, Dyadic>) {
    bool fast = algorithm == MulAlgorithm::subquadratic ||
                (algorithm == MulAlgorithm::automatic && n >= kSubquadraticThreshold);
    if (fast) return USeries<Scalar>(detail::convolve_kronecker(a.coefficients(), b.coefficients(), n));
  } else {
    if (algorithm == MulAlgorithm::subquadratic)
      throw PreconditionFailed("subquadratic product is only available for dyadic series");
  }
  return USeries<Scalar>(detail::convolve_schoolbook(a.coefficients(), b.coefficients(), n));
}

template <class Scalar>
USeries<Scalar> operator*(const USeries<Scalar>& a, const USeries<Scalar>& b) {
  return mul(a, b);
}

/// a(y^k); truncation order k * trunc(a).
template <class Scalar>
USeries<Scalar> compose_monomial(const USeries<Scalar>& a, std::size_t k) {
  if (k == 0) throw PreconditionFailed("compose_monomial: k must be positive");
  USeries<Scalar> r(a.trunc() * k);
  for (std::size_t i = 0; i < a.trunc(); ++i) r[i * k] = a[i];
  return r;
}

}  // namespace germdyn
