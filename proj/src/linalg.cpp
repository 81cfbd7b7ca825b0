#include "germdyn/linalg.hpp"

#include "germdyn/errors.hpp"

namespace germdyn {

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw PreconditionFailed("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  Rational det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Rational> leading_minors(const RationalMatrix& m) {
  std::vector<Rational> out;
  for (Eigen::Index k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.topLeftCorner(k, k)));
  return out;
}

std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw PreconditionFailed("solve: dimension mismatch");
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      a.row(p).swap(a.row(k));
      b.row(p).swap(b.row(k));
    }
    Rational inv = Rational(1) / a(k, k);
    a.row(k) *= inv;
    b.row(k) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      a.row(i) -= f * a.row(k);
      b.row(i) -= f * b.row(k);
    }
  }
  return b;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  return solve(a, RationalMatrix::Identity(a.rows(), a.cols()));
}

}  // namespace germdyn
