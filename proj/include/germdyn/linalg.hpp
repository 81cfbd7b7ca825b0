#pragma once

// Dense exact linear algebra: Eigen matrices over the exact Rational scalar.
// Eigen's own decompositions pivot on magnitude, which is harmless but
// pointless over Q; elimination here takes the first nonzero pivot.

#include "germdyn/arith.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace germdyn {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;

template <class Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

/// det of the k x k leading block, k = 1..n.
std::vector<Rational> leading_minors(const RationalMatrix& m);

/// Solution X of A X = B, or nullopt when A is singular.
std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b);

/// A^-1, or nullopt when A is singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace germdyn
