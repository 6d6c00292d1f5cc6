#pragma once

#include "gmm/forms.hpp"

namespace gmm {

/// Determinant of the 2d x 2d Sylvester matrix of a pair of binary forms,
/// coefficients ordered from x^d down to y^d. Res(x^d, y^d) = 1.
Rational sylvester_resultant(const HomogeneousLift& lift);

struct MacaulayOptions {
  /// Unimodular changes of variables tried when the quotient is 0/0.
  int max_retries = 20;
  unsigned seed = 0x5eed;
};

/// Multivariate resultant by Macaulay's quotient formula at degree
/// (N+1)(d-1)+1, normalized so Res(x_0^d, ..., x_N^d) = 1.
/// Throws DegenerateSpecializationError when every retry stays 0/0.
Rational macaulay_resultant(const HomogeneousLift& lift,
                            const MacaulayOptions& options = {});

/// Sylvester for N = 1, Macaulay otherwise.
Rational resultant(const HomogeneousLift& lift);

bool is_morphism(const HomogeneousLift& lift);

/// Degree of Res in the coefficients of each single form: d^N.
long coefficient_degree(int N, int d);

/// C(N,d) with Res(A o Phi o A^{-1}) = det(A)^C Res(Phi). Combining
/// Res(A o Phi) = det(A)^(d^N) Res(Phi) with
/// Res(Phi o A) = det(A)^(d^(N+1)) Res(Phi) gives C = d^N (1 - d).
long conjugation_exponent(int N, int d);

/// e with Res(c * Phi) = c^e Res(Phi): (N+1) d^N.
long scaling_exponent(int N, int d);

/// Square Macaulay matrix of degree nu = (N+1)(d-1)+1 (rows and columns
/// indexed by grlex monomials of degree nu) together with the reduced-minor
/// index set. Exposed for tests.
struct MacaulaySystem {
  std::vector<Exponent> monomials;
  IntegerMatrix matrix;
  std::vector<Eigen::Index> minor_indices;
};
MacaulaySystem macaulay_system(const std::vector<std::vector<std::pair<Exponent, Integer>>>& forms,
                               int num_vars, int degree);

}  // namespace gmm
