#pragma once

#include <map>
#include <vector>

#include "gmm/matrix.hpp"
#include "gmm/normal_forms.hpp"

namespace gmm {

/// A full-rank Z-lattice in Q^n, kept in canonical form: L = scale * rowspan(H)
/// with H the integer Hermite normal form of D*L for the least positive
/// integer D making D*L integral, and scale = 1/D. Structural equality is
/// lattice equality.
class Lattice {
 public:
  /// Z^n.
  static Lattice standard(int n);
  /// The lattice spanned by the given row vectors.
  static Lattice from_generators(const std::vector<RationalVector>& rows, int n);
  /// A * Z^n, the span of the columns of A.
  static Lattice column_span(const RationalMatrix& a);

  int dim() const { return static_cast<int>(hermite_.rows()); }
  const Rational& scale() const { return scale_; }
  const IntegerMatrix& hermite() const { return hermite_; }

  /// Canonical row basis scale * H.
  RationalMatrix basis() const;
  /// G with L = G * Z^n (the transpose of basis()).
  RationalMatrix generator_matrix() const;

  bool contains(const RationalVector& v) const;
  bool contains(const Lattice& other) const;
  /// |det| of a basis.
  Rational covolume() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim() == b.dim() && a.scale_ == b.scale_ && a.hermite_ == b.hermite_;
  }

 private:
  Lattice(Rational scale, IntegerMatrix hermite)
      : scale_(std::move(scale)), hermite_(std::move(hermite)) {}
  static Lattice canonical(const RationalMatrix& rows);

  Rational scale_;
  IntegerMatrix hermite_;
};

Lattice lattice_from_generators(const std::vector<RationalVector>& rows, int n);

/// A * L for a rational matrix acting on column vectors.
Lattice transform(const RationalMatrix& a, const Lattice& lattice);

/// Elementary p-orders of L_p, ascending: L_p = U diag(p^e_i) Z_p^n.
struct LocalLatticeData {
  Prime prime;
  std::vector<long> elementary_orders;

  bool is_trivial() const;
  friend bool operator==(const LocalLatticeData&, const LocalLatticeData&) = default;
};

LocalLatticeData localize(const Lattice& lattice, const Prime& p);

/// Primes at which L differs from Z^n.
std::vector<Prime> support_primes(const Lattice& lattice);

/// H with entries in Z[1/p], |det H| a power of p, H Z_p^n = A Z_p^n and
/// H Z_q^n = Z_q^n for q != p.
RationalMatrix prescribed_local_generator(const Prime& p, const RationalMatrix& a);

Lattice intersect(const Lattice& a, const Lattice& b);

/// {w : w.v in Z for all v in L}, with row basis (B^{-1})^T.
Lattice dual(const Lattice& lattice);

using LocalData = std::map<Prime, RationalMatrix>;

/// The unique lattice X with X_p = A_p Z_p^n on the support and Z_q^n
/// elsewhere. Empty data gives Z^n (n must then be supplied).
Lattice glue_local(const LocalData& data, int n);

/// A finitely supported element of GL_n of the finite adeles: a component
/// per prime in the support, and one default component at every other prime.
/// The default is the identity unless stated; a principal adele has empty
/// support and its matrix as the default.
class AdeleMatrix {
 public:
  explicit AdeleMatrix(int n);
  AdeleMatrix(int n, LocalData support);
  AdeleMatrix(RationalMatrix default_component, LocalData support);

  static AdeleMatrix identity(int n) { return AdeleMatrix(n); }
  static AdeleMatrix principal(const RationalMatrix& a) { return AdeleMatrix(a, {}); }

  int dim() const { return static_cast<int>(default_.rows()); }
  const LocalData& support() const { return support_; }
  const RationalMatrix& default_component() const { return default_; }
  /// The component at p.
  const RationalMatrix& at(const Prime& p) const;

  AdeleMatrix inverse() const;
  friend AdeleMatrix operator*(const AdeleMatrix& a, const AdeleMatrix& b);

  /// Every component lies in GL_n(Z_p), checked exactly at all primes.
  bool in_standard_stabilizer() const;

  friend bool operator==(const AdeleMatrix&, const AdeleMatrix&) = default;

 private:
  void normalize();

  RationalMatrix default_;
  LocalData support_;
};

/// A . L: the lattice with localization A_p L_p at every p.
Lattice act(const AdeleMatrix& a, const Lattice& lattice);

/// A = C * B with B principal and every C_p in GL_n(Z_p).
struct AdelicFactorization {
  AdeleMatrix stabilizer_part;   // C
  RationalMatrix principal_part; // B
};
AdelicFactorization adelic_factorize(const AdeleMatrix& a);

}  // namespace gmm
