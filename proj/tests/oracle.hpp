#pragma once

// Independent exhaustive scorer for binary quadratic maps at a prime p. It
// enumerates every lattice class within distance `radius` of Z^2 directly as
// column-style Hermite bases [[p^j, c], [0, p^(k-j)]] of the primitive
// sublattices of index p^k, conjugates by hand-expanded formulas, and scores
// with the closed-form binary quadratic resultant. It shares no code with the
// library beyond the number types.

#include <array>
#include <vector>

#include "gmm/arith.hpp"

namespace gmm::oracle {

// Coefficients (x^2, xy, y^2) of the two forms.
using Quadratic = std::array<Rational, 3>;
using QuadraticMap = std::array<Quadratic, 2>;

inline Rational closed_form_resultant(const QuadraticMap& f) {
  const auto& [a, b, c] = f[0];
  const auto& [d, e, g] = f[1];
  const Rational u = a * g - c * d;
  return u * u - (a * e - b * d) * (b * g - c * e);
}

// F(a x + b y, c x + d y).
inline Quadratic substitute(const Quadratic& f, const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d) {
  return {f[0] * a * a + f[1] * a * c + f[2] * c * c,
          f[0] * 2 * a * b + f[1] * (a * d + b * c) + f[2] * 2 * c * d,
          f[0] * b * b + f[1] * b * d + f[2] * d * d};
}

// T^{-1} o F o T for T = [[a, b], [c, d]].
inline QuadraticMap conjugate_by_inverse(const QuadraticMap& f, const Rational& a,
                                         const Rational& b, const Rational& c,
                                         const Rational& d) {
  const Quadratic g0 = substitute(f[0], a, b, c, d), g1 = substitute(f[1], a, b, c, d);
  const Rational det = a * d - b * c;
  QuadraticMap out;
  for (int k = 0; k < 3; ++k) {
    out[0][k] = (d * g0[k] - b * g1[k]) / det;
    out[1][k] = (-c * g0[k] + a * g1[k]) / det;
  }
  return out;
}

inline long valuation(const Rational& x, const Integer& p) {
  long v = 0;
  Integer num = numerator(x), den = denominator(x);
  while (num % p == 0) { num /= p; ++v; }
  while (den % p == 0) { den /= p; --v; }
  return v;
}

// ord_p Res of the p-primitive scaling of f.
inline long primitive_valuation(const QuadraticMap& f, const Integer& p) {
  long shift = 0;
  bool first = true;
  for (const auto& form : f)
    for (const auto& c : form)
      if (c != 0) {
        const long v = valuation(c, p);
        if (first || v < shift) shift = v;
        first = false;
      }
  return valuation(closed_form_resultant(f), p) - 4 * shift;
}

struct Enumeration {
  long best;
  std::size_t classes;
};

inline Enumeration exhaustive_minimum(const QuadraticMap& f, long prime, int radius) {
  const Integer p = prime;
  Enumeration out{primitive_valuation(f, p), 1};
  for (int k = 1; k <= radius; ++k) {
    // Primitive sublattices with cyclic quotient of order p^k, one per point
    // of P^1(Z/p^k): p^k + p^(k-1) of them, in two families.
    std::vector<std::array<Integer, 4>> bases;
    const Integer pk = pow(p, static_cast<unsigned long>(k));
    // Columns (p^k, 0), (c, 1): lattices {(u, v) : u = c v mod p^k}.
    for (Integer c = 0; c < pk; ++c) bases.push_back({pk, c, Integer(0), Integer(1)});
    // Columns (1, p c'), (0, p^k): lattices {(u, v) : v = p c' u mod p^k}.
    const Integer pk1 = pow(p, static_cast<unsigned long>(k - 1));
    for (Integer c = 0; c < pk1; ++c)
      bases.push_back({Integer(1), Integer(0), Integer(p * c), pk});
    for (const auto& t : bases) {
      const long v = primitive_valuation(
          conjugate_by_inverse(f, Rational(t[0]), Rational(t[1]), Rational(t[2]), Rational(t[3])), p);
      out.best = std::min(out.best, v);
      ++out.classes;
    }
  }
  return out;
}

}  // namespace gmm::oracle
