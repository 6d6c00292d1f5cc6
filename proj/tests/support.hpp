#pragma once

#include <random>
#include <string>
#include <vector>

#include "gmm/arith.hpp"
#include "gmm/forms.hpp"
#include "gmm/map_format.hpp"
#include "gmm/matrix.hpp"

namespace gmm::testing {

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline HomogeneousLift lift(const std::vector<std::string>& forms) {
  return parse_forms(forms, default_coords(static_cast<int>(forms.size())));
}

inline RationalMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()),
                   static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const char* entry : row) m(i, j++) = parse_rational(entry);
    ++i;
  }
  return m;
}

inline RationalMatrix diag(std::initializer_list<const char*> entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  Eigen::Index i = 0;
  for (const char* e : entries) { m(i, i) = parse_rational(e); ++i; }
  return m;
}

inline RationalMatrix identity(int n) { return RationalMatrix::Identity(n, n); }

class Random {
 public:
  explicit Random(unsigned seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }
  Rational rational(long bound) {
    return make_rational(Integer(integer(-bound, bound)), Integer(integer(1, bound)));
  }
  Rational nonzero_rational(long bound) {
    for (;;) {
      Rational r = rational(bound);
      if (r != 0) return r;
    }
  }

  /// Random integer lift with entries in [-bound, bound], not all zero.
  HomogeneousLift integer_lift(int N, int d, long bound) {
    std::vector<Form> forms;
    for (int i = 0; i <= N; ++i) {
      Form f(N + 1, d);
      for (const auto& e : monomials(N + 1, d)) f.add_term(e, Rational(integer(-bound, bound)));
      forms.push_back(std::move(f));
    }
    if (std::all_of(forms.begin(), forms.end(), [](const Form& f) { return f.is_zero(); }))
      forms[0].add_term(monomials(N + 1, d).front(), Rational(1));
    return HomogeneousLift(std::move(forms));
  }

  RationalMatrix integer_matrix(int n, long bound) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(integer(-bound, bound));
    return m;
  }
  RationalMatrix invertible_integer_matrix(int n, long bound) {
    for (;;) {
      RationalMatrix m = integer_matrix(n, bound);
      if (determinant(m) != 0) return m;
    }
  }
  RationalMatrix invertible_rational_matrix(int n, long bound) {
    for (;;) {
      RationalMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rational(bound);
      if (determinant(m) != 0) return m;
    }
  }

  /// Product of random elementary matrices: integral with determinant +-1.
  RationalMatrix unimodular(int n, int steps = 6) {
    RationalMatrix u = RationalMatrix::Identity(n, n);
    if (n == 1) {
      u(0, 0) = integer(0, 1) ? 1 : -1;
      return u;
    }
    for (int k = 0; k < steps; ++k) {
      const auto i = integer(0, n - 1);
      auto j = integer(0, n - 2);
      if (j >= i) ++j;
      u.row(i) += u.row(j) * Rational(integer(-2, 2));
      if (integer(0, 3) == 0) u.row(i).swap(u.row(j));
    }
    return u;
  }

  /// U * diag(prime powers) * V with the primes drawn from `primes`.
  RationalMatrix local_mixture(int n, const std::vector<long>& primes, long max_exponent) {
    RationalMatrix d = RationalMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (long p : primes) d(i, i) *= pow(Rational(p), integer(-max_exponent, max_exponent));
    return unimodular(n) * d * unimodular(n);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gmm::testing
