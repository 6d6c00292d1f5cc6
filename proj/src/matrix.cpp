#include "gmm/matrix.hpp"

#include "gmm/errors.hpp"

namespace gmm {

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  // Clear each row separately so the correction is a product of row factors.
  IntegerMatrix cleared(a.rows(), a.cols());
  Integer factor = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    auto row = clear_denominators(a.row(i));
    cleared.row(i) = row.matrix;
    factor *= row.denominator;
  }
  return make_rational(bareiss_determinant(cleared), factor);
}

RationalMatrix inverse(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("inverse of a non-square matrix");
  const Rational det = determinant(a);
  if (det == 0) throw DomainError("singular matrix " + to_string(a));
  if (n == 1) return RationalMatrix::Constant(1, 1, Rational(1) / det);
  RationalMatrix out(n, n);
  RationalMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Cofactor of (i, j) lands at (j, i).
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Rational cofactor = determinant(minor);
      if ((i + j) % 2) cofactor = -cofactor;
      out(j, i) = cofactor / det;
    }
  }
  return out;
}

Order min_order(const RationalMatrix& a, const Prime& p) {
  Order best = Order::infinity();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      best = std::min(best, ord_p(a(i, j), p));
  return best;
}

bool is_p_integral(const RationalMatrix& a, const Prime& p) {
  return min_order(a, p) >= Order(0);
}

bool is_p_unimodular(const RationalMatrix& a, const Prime& p) {
  return a.rows() == a.cols() && is_p_integral(a, p) &&
         ord_p(determinant(a), p) == Order(0);
}

std::string to_string(const RationalMatrix& a) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out += ",";
      out += to_string(a(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace gmm
