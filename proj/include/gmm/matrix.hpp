#pragma once

#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "gmm/arith.hpp"

namespace gmm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntegerVector = Vector<Integer>;
using RationalVector = Vector<Rational>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Derived>
Integer bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  static_assert(std::is_same_v<typename Derived::Scalar, Integer>);
  eigen_assert(input.rows() == input.cols());
  IntegerMatrix m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign < 0 ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// A = matrix / denominator with matrix integral and denominator > 0 minimal.
struct ClearedMatrix {
  Integer denominator;
  IntegerMatrix matrix;
};

template <typename Derived>
ClearedMatrix clear_denominators(const Eigen::MatrixBase<Derived>& a) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      den = lcm(den, Integer(denominator(a(i, j))));
  IntegerMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out(i, j) = numerator(Rational(a(i, j) * den));
  return {den, std::move(out)};
}

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& a) {
  return a.template cast<Rational>();
}

Rational determinant(const RationalMatrix& a);

/// Exact inverse via adjugate and determinant. Throws DomainError if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Every entry has nonnegative p-order.
bool is_p_integral(const RationalMatrix& a, const Prime& p);

/// p-integral with a p-unit determinant, i.e. an element of GL_n(Z_p).
bool is_p_unimodular(const RationalMatrix& a, const Prime& p);

/// Smallest p-order among the entries (+infinity for the zero matrix).
Order min_order(const RationalMatrix& a, const Prime& p);

/// Row-major textual form, e.g. [[1,1/2],[0,3]].
std::string to_string(const RationalMatrix& a);

}  // namespace gmm
