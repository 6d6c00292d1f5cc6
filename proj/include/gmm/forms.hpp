#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gmm/arith.hpp"
#include "gmm/matrix.hpp"

namespace gmm {

using Exponent = std::vector<int>;

/// Graded lexicographic order, largest monomial first: x0^d precedes
/// x0^(d-1)*x1 precedes ... precedes xN^d.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Enumerates all exponent vectors of the given total degree, grlex
/// descending.
std::vector<Exponent> monomials(int num_vars, int degree);

/// A homogeneous polynomial with rational coefficients, stored sparsely.
class Form {
 public:
  using Terms = std::map<Exponent, Rational, GrlexDescending>;

  Form(int num_vars, int degree);
  Form(int num_vars, int degree, Terms terms);

  static Form variable(int num_vars, int index);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e. Throws DomainError if e has the wrong length or degree.
  void add_term(const Exponent& e, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Rational& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form&, const Form&) = default;

 private:
  int num_vars_;
  int degree_;
  Terms terms_;
};

/// The tuple (Phi_0, ..., Phi_N) of forms of common degree d >= 1 in N+1
/// variables.
class HomogeneousLift {
 public:
  explicit HomogeneousLift(std::vector<Form> forms);

  int N() const { return static_cast<int>(forms_.size()) - 1; }
  int num_vars() const { return static_cast<int>(forms_.size()); }
  int degree() const { return forms_.front().degree(); }
  const std::vector<Form>& forms() const { return forms_; }
  const Form& operator[](int i) const { return forms_[i]; }

  /// All stored coefficients, form by form in grlex order.
  std::vector<Rational> coefficients() const;

  friend bool operator==(const HomogeneousLift&, const HomogeneousLift&) = default;

 private:
  std::vector<Form> forms_;
};

std::vector<Rational> evaluate(const HomogeneousLift& lift,
                               std::span<const Rational> point);

/// x -> A * lift(A^{-1} x), expanded exactly.
HomogeneousLift conjugate(const HomogeneousLift& lift, const RationalMatrix& a);

/// Precomposition x -> lift(A x).
HomogeneousLift compose_right(const HomogeneousLift& lift,
                              const RationalMatrix& a);

/// x -> A * lift(x).
HomogeneousLift compose_left(const RationalMatrix& a,
                             const HomogeneousLift& lift);

HomogeneousLift scale(const HomogeneousLift& lift, const Rational& c);

/// lift / content, integer coefficients with gcd 1 and the first nonzero
/// coefficient positive.
struct PrimitiveLift {
  Rational content;
  HomogeneousLift lift;
};
PrimitiveLift primitive_part(const HomogeneousLift& lift);

class ResidueForm {
 public:
  using Terms = std::map<Exponent, Integer, GrlexDescending>;

  ResidueForm(Prime prime, int num_vars, int degree, Terms terms);

  const Prime& prime() const { return prime_; }
  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ResidueForm&, const ResidueForm&) = default;

 private:
  Prime prime_;
  int num_vars_;
  int degree_;
  Terms terms_;
};

/// Coefficientwise reduction modulo p. Throws DomainError naming the first
/// coefficient that is not p-integral.
std::vector<ResidueForm> reduce_mod_p(const HomogeneousLift& lift,
                                      const Prime& p);

/// lift = scalar * (conjugator o base o conjugator^{-1}), checked on
/// construction.
class Model {
 public:
  Model(HomogeneousLift lift, RationalMatrix conjugator, Rational scalar,
        HomogeneousLift base);

  static Model identity(const HomogeneousLift& base);

  const HomogeneousLift& lift() const { return lift_; }
  const RationalMatrix& conjugator() const { return conjugator_; }
  const Rational& scalar() const { return scalar_; }
  const HomogeneousLift& base() const { return base_; }

 private:
  HomogeneousLift lift_;
  RationalMatrix conjugator_;
  Rational scalar_;
  HomogeneousLift base_;
};

/// Canonical text, e.g. "x^2 - 3/2*x*y + y^2". Zero renders as "0".
std::string render(const Form& form, std::span<const std::string> coords);

/// x, y for N = 1; x, y, z for N = 2; x0..xN otherwise.
std::vector<std::string> default_coords(int num_vars);

}  // namespace gmm
