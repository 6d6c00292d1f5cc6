#include "gmm/forms.hpp"

#include <numeric>

#include "gmm/errors.hpp"

namespace gmm {

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return b < a;
}

std::vector<Exponent> monomials(int num_vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(num_vars, 0);
  // Recursive fill, largest power of the earliest variable first.
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == num_vars - 1) {
      e[index] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[index] = k;
      self(self, index + 1, remaining - k);
    }
  };
  if (num_vars > 0 && degree >= 0) fill(fill, 0, degree);
  return out;
}

Form::Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1) throw DomainError("a form needs at least one variable");
  if (degree < 0) throw DomainError("negative degree");
}

Form::Form(int num_vars, int degree, Terms terms) : Form(num_vars, degree) {
  for (auto& [e, c] : terms) add_term(e, c);
}

Form Form::variable(int num_vars, int index) {
  Form out(num_vars, 1);
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  out.add_term(e, 1);
  return out;
}

Rational Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw DomainError("exponent length does not match the variable count");
  int total = 0;
  for (int k : e) {
    if (k < 0) throw DomainError("negative exponent");
    total += k;
  }
  if (total != degree_) throw DomainError("term degree differs from form degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Form::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw DomainError("point has the wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < num_vars_; ++i) term *= pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

Form& Form::operator+=(const Form& other) {
  if (other.num_vars_ != num_vars_ || other.degree_ != degree_)
    throw DomainError("adding forms of different shapes");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += other * Rational(-1); }

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  if (a.num_vars_ != b.num_vars_) throw DomainError("multiplying forms in different rings");
  Form out(a.num_vars_, a.degree_ + b.degree_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

HomogeneousLift::HomogeneousLift(std::vector<Form> forms) : forms_(std::move(forms)) {
  if (forms_.size() < 2) throw DomainError("a lift needs N+1 >= 2 forms");
  const int n = static_cast<int>(forms_.size());
  const int d = forms_.front().degree();
  if (d < 1) throw DomainError("algebraic degree must be at least 1");
  bool any_nonzero = false;
  for (const auto& f : forms_) {
    if (f.num_vars() != n)
      throw DomainError("each form must have N+1 variables");
    if (f.degree() != d) throw DomainError("forms must share one degree");
    any_nonzero |= !f.is_zero();
  }
  if (!any_nonzero) throw DomainError("all forms are zero");
}

std::vector<Rational> HomogeneousLift::coefficients() const {
  std::vector<Rational> out;
  for (const auto& f : forms_)
    for (const auto& [e, c] : f.terms()) out.push_back(c);
  return out;
}

std::vector<Rational> evaluate(const HomogeneousLift& lift,
                               std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(lift.forms().size());
  for (const auto& f : lift.forms()) out.push_back(f.evaluate(point));
  return out;
}

namespace {

// Substitutes x_j -> linear[j] into every form.
std::vector<Form> substitute(const HomogeneousLift& lift,
                             const std::vector<Form>& linear) {
  const int n = lift.num_vars();
  const int d = lift.degree();
  // powers[j][k] = linear[j]^k
  std::vector<std::vector<Form>> powers(n);
  for (int j = 0; j < n; ++j) {
    Form one(n, 0);
    one.add_term(Exponent(n, 0), 1);
    powers[j].push_back(std::move(one));
    for (int k = 1; k <= d; ++k) powers[j].push_back(powers[j].back() * linear[j]);
  }
  std::vector<Form> out;
  out.reserve(n);
  for (const auto& f : lift.forms()) {
    Form image(n, d);
    for (const auto& [e, c] : f.terms()) {
      Form term = powers[0][e[0]];
      for (int j = 1; j < n; ++j) term = term * powers[j][e[j]];
      image += term * c;
    }
    out.push_back(std::move(image));
  }
  return out;
}

void check_square(const HomogeneousLift& lift, const RationalMatrix& a) {
  if (a.rows() != lift.num_vars() || a.cols() != lift.num_vars())
    throw DomainError("matrix size does not match the number of variables");
}

}  // namespace

HomogeneousLift compose_right(const HomogeneousLift& lift, const RationalMatrix& a) {
  check_square(lift, a);
  const int n = lift.num_vars();
  std::vector<Form> linear;
  for (int j = 0; j < n; ++j) {
    Form l(n, 1);
    for (int k = 0; k < n; ++k) {
      Exponent e(n, 0);
      e[k] = 1;
      l.add_term(e, a(j, k));
    }
    linear.push_back(std::move(l));
  }
  return HomogeneousLift(substitute(lift, linear));
}

HomogeneousLift compose_left(const RationalMatrix& a, const HomogeneousLift& lift) {
  check_square(lift, a);
  const int n = lift.num_vars();
  std::vector<Form> out;
  for (int i = 0; i < n; ++i) {
    Form row(n, lift.degree());
    for (int j = 0; j < n; ++j)
      if (a(i, j) != 0) row += lift[j] * a(i, j);
    out.push_back(std::move(row));
  }
  return HomogeneousLift(std::move(out));
}

HomogeneousLift conjugate(const HomogeneousLift& lift, const RationalMatrix& a) {
  check_square(lift, a);
  return compose_left(a, compose_right(lift, inverse(a)));
}

HomogeneousLift scale(const HomogeneousLift& lift, const Rational& c) {
  if (c == 0) throw DomainError("scaling a lift by zero");
  std::vector<Form> out;
  for (const auto& f : lift.forms()) out.push_back(f * c);
  return HomogeneousLift(std::move(out));
}

PrimitiveLift primitive_part(const HomogeneousLift& lift) {
  const Rational content = content_and_primitive(lift.coefficients()).content;
  return {content, scale(lift, Rational(1) / content)};
}

ResidueForm::ResidueForm(Prime prime, int num_vars, int degree, Terms terms)
    : prime_(std::move(prime)), num_vars_(num_vars), degree_(degree) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != num_vars ||
        std::accumulate(e.begin(), e.end(), 0) != degree)
      throw DomainError("residue term has the wrong shape");
    Integer r = c % prime_.value();
    if (r < 0) r += prime_.value();
    if (r != 0) terms_.emplace(e, std::move(r));
  }
}

std::vector<ResidueForm> reduce_mod_p(const HomogeneousLift& lift, const Prime& p) {
  std::vector<ResidueForm> out;
  for (const auto& f : lift.forms()) {
    ResidueForm::Terms terms;
    for (const auto& [e, c] : f.terms()) {
      const Integer den = denominator(c);
      if (den % p.value() == 0)
        throw DomainError("coefficient " + to_string(c) + " is not " + p.str() +
                          "-integral");
      // c = num/den with den invertible mod p.
      Integer inv;
      mpz_invert(inv.backend().data(), den.backend().data(), p.value().backend().data());
      terms.emplace(e, Integer(numerator(c) * inv));
    }
    out.emplace_back(p, f.num_vars(), f.degree(), std::move(terms));
  }
  return out;
}

Model::Model(HomogeneousLift lift, RationalMatrix conjugator, Rational scalar,
             HomogeneousLift base)
    : lift_(std::move(lift)),
      conjugator_(std::move(conjugator)),
      scalar_(std::move(scalar)),
      base_(std::move(base)) {
  if (scalar_ == 0) throw DomainError("model scalar must be nonzero");
  if (lift_ != scale(conjugate(base_, conjugator_), scalar_))
    throw DomainError("model lift is not the stated conjugate of its base");
}

Model Model::identity(const HomogeneousLift& base) {
  return Model(base, RationalMatrix::Identity(base.num_vars(), base.num_vars()), 1,
               base);
}

std::string render(const Form& form, std::span<const std::string> coords) {
  if (static_cast<int>(coords.size()) != form.num_vars())
    throw DomainError("coordinate list does not match the variable count");
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : form.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string monomial;
    for (int i = 0; i < form.num_vars(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += coords[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += to_string(magnitude) + "*" + monomial;
  }
  return out;
}

std::vector<std::string> default_coords(int num_vars) {
  if (num_vars == 2) return {"x", "y"};
  if (num_vars == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  for (int i = 0; i < num_vars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace gmm
