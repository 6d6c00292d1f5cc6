#pragma once

#include "gmm/matrix.hpp"

namespace gmm {

/// Row-style Hermite normal form of the row lattice of `m` (m.rows() >= n,
/// column rank n): the n x n upper-triangular basis with positive pivots and
/// entries above each pivot reduced into [0, pivot). Throws DomainError if
/// the rows do not have full column rank.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// m = left * diagonal * right with left, right unimodular and
/// diagonal(i, i) > 0 dividing diagonal(i+1, i+1).
struct SmithDecomposition {
  IntegerMatrix left;
  IntegerMatrix diagonal;
  IntegerMatrix right;
};

/// Smith normal form of a nonsingular square integer matrix. Throws
/// DomainError if singular.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Floor division and its nonnegative remainder for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

}  // namespace gmm
