#pragma once

#include <cstddef>
#include <vector>

#include "gmm/forms.hpp"

namespace gmm {

bool is_p_integral(const HomogeneousLift& lift, const Prime& p);

/// Multiplies by p^max(0, -min ord_p(coefficient)).
HomogeneousLift p_integral_scale(const HomogeneousLift& lift, const Prime& p);

/// lift * p^shift with shift = -min ord_p(coefficient): p-integral with a
/// p-unit coefficient.
struct PScaledLift {
  HomogeneousLift lift;
  long shift;
};
PScaledLift p_primitive_scale(const HomogeneousLift& lift, const Prime& p);

/// ord_p(Res) == 0. Throws DomainError unless the lift is p-integral.
bool has_unit_resultant(const HomogeneousLift& lift, const Prime& p);

/// Matrices T with T Z^n running over the proper lattices strictly between
/// p Z^n and Z^n (one per nonzero proper subspace of F_p^n), followed by
/// their inverses. 2(p+1) moves for n = 2.
std::vector<RationalMatrix> neighbor_moves(int n, const Prime& p);

struct LocalModelSearchResult {
  Model model;
  long valuation;
  bool radius_exhausted;
  std::size_t visited;
};

/// Breadth-first search over lattice classes at p within `radius` neighbor
/// steps of the standard class. Each class T Z_p^n is scored by the
/// p-primitive scaling of T^{-1} o lift o T. Ties go to the shallower class,
/// then to the lexicographically least class key. The search stops after
/// the first level that reaches valuation 0; radius_exhausted reports that
/// it did not.
LocalModelSearchResult minimize_local(const HomogeneousLift& lift, const Prime& p,
                                      int radius = 3);

/// Primes dividing a denominator or Res of the content-normalized lift.
std::vector<Prime> bad_primes(const HomogeneousLift& lift);

}  // namespace gmm
