#include "gmm/resultant.hpp"

#include <map>
#include <random>

#include "gmm/errors.hpp"

namespace gmm {

namespace {

long ipow(long base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

using IntegerForm = std::vector<std::pair<Exponent, Integer>>;

// Clears each form separately: lift[i] = forms[i] / denominators[i].
std::pair<std::vector<IntegerForm>, std::vector<Integer>> integral_forms(
    const HomogeneousLift& lift) {
  std::vector<IntegerForm> forms;
  std::vector<Integer> denominators;
  for (const auto& f : lift.forms()) {
    Integer den = 1;
    for (const auto& [e, c] : f.terms()) den = lcm(den, Integer(denominator(c)));
    IntegerForm out;
    for (const auto& [e, c] : f.terms()) out.emplace_back(e, numerator(Rational(c * den)));
    forms.push_back(std::move(out));
    denominators.push_back(den);
  }
  return {std::move(forms), std::move(denominators)};
}

RationalMatrix random_unimodular(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntegerMatrix u(n, n);
  for (;;) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u(i, j) = entry(rng);
    if (bareiss_determinant(u) == 1) return to_rational(u);
  }
}

// Rank of an integer matrix by fraction-free elimination.
Eigen::Index integer_rank(IntegerMatrix m) {
  Eigen::Index rank = 0;
  Integer previous = 1;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / previous;
      m(i, col) = 0;
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

// Whether every form of degree nu lies in the ideal generated by the forms.
// At nu = (N+1)(d-1)+1 this holds exactly when Res != 0.
bool spans_critical_degree(const std::vector<IntegerForm>& forms, int num_vars, int degree) {
  const int nu = num_vars * (degree - 1) + 1;
  const auto targets = monomials(num_vars, nu);
  const auto multipliers = monomials(num_vars, nu - degree);
  std::map<Exponent, Eigen::Index> index;
  for (std::size_t k = 0; k < targets.size(); ++k)
    index.emplace(targets[k], static_cast<Eigen::Index>(k));
  IntegerMatrix m = IntegerMatrix::Zero(
      static_cast<Eigen::Index>(forms.size() * multipliers.size()),
      static_cast<Eigen::Index>(targets.size()));
  Eigen::Index row = 0;
  Exponent shifted(num_vars);
  for (const auto& form : forms) {
    for (const auto& q : multipliers) {
      for (const auto& [e, c] : form) {
        for (int i = 0; i < num_vars; ++i) shifted[i] = q[i] + e[i];
        m(row, index.at(shifted)) = c;
      }
      ++row;
    }
  }
  const Eigen::Index cols = m.cols();
  return integer_rank(std::move(m)) == cols;
}

}  // namespace

long coefficient_degree(int N, int d) { return ipow(d, N); }

long conjugation_exponent(int N, int d) { return ipow(d, N) * (1 - d); }

long scaling_exponent(int N, int d) { return (N + 1) * ipow(d, N); }

Rational sylvester_resultant(const HomogeneousLift& lift) {
  if (lift.N() != 1) throw DomainError("Sylvester resultant needs N = 1");
  const int d = lift.degree();
  RationalMatrix s = RationalMatrix::Zero(2 * d, 2 * d);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i <= d; ++i) {
      const Rational c = lift[k].coefficient({d - i, i});
      for (int shift = 0; shift < d; ++shift) s(k * d + shift, shift + i) = c;
    }
  }
  return determinant(s);
}

MacaulaySystem macaulay_system(const std::vector<IntegerForm>& forms, int num_vars,
                               int degree) {
  const int nu = num_vars * (degree - 1) + 1;
  MacaulaySystem sys;
  sys.monomials = monomials(num_vars, nu);
  std::map<Exponent, Eigen::Index> index;
  for (std::size_t k = 0; k < sys.monomials.size(); ++k)
    index.emplace(sys.monomials[k], static_cast<Eigen::Index>(k));

  const auto size = static_cast<Eigen::Index>(sys.monomials.size());
  sys.matrix = IntegerMatrix::Zero(size, size);
  Exponent shifted(num_vars);
  for (Eigen::Index row = 0; row < size; ++row) {
    const Exponent& m = sys.monomials[row];
    int divisible = 0, first = -1;
    for (int i = 0; i < num_vars; ++i) {
      if (m[i] >= degree) {
        ++divisible;
        if (first < 0) first = i;
      }
    }
    // Monomials divisible by two or more x_i^d index the extraneous minor.
    if (divisible > 1) sys.minor_indices.push_back(row);
    Exponent quotient = m;
    quotient[first] -= degree;
    for (const auto& [e, c] : forms[first]) {
      for (int i = 0; i < num_vars; ++i) shifted[i] = quotient[i] + e[i];
      sys.matrix(row, index.at(shifted)) = c;
    }
  }
  return sys;
}

Rational macaulay_resultant(const HomogeneousLift& input, const MacaulayOptions& options) {
  const int n = input.num_vars();
  const int d = input.degree();
  std::mt19937 rng(options.seed);
  HomogeneousLift lift = input;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    if (attempt > 0) lift = compose_right(input, random_unimodular(n, rng));
    auto [forms, denominators] = integral_forms(lift);
    const MacaulaySystem sys = macaulay_system(forms, n, d);
    const auto k = static_cast<Eigen::Index>(sys.minor_indices.size());
    IntegerMatrix minor(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        minor(i, j) = sys.matrix(sys.minor_indices[i], sys.minor_indices[j]);
    const Integer minor_det = bareiss_determinant(minor);
    const Integer full_det = bareiss_determinant(sys.matrix);
    if (minor_det == 0) {
      if (full_det != 0)
        throw std::logic_error("Macaulay numerator nonzero over a vanishing minor");
      if (!spans_critical_degree(forms, n, d)) return 0;
      continue;
    }
    Integer cleared = 1;
    const auto per_form = static_cast<unsigned long>(coefficient_degree(n - 1, d));
    for (const auto& den : denominators) cleared *= pow(den, per_form);
    // A unimodular change of variables with det 1 leaves Res unchanged.
    return make_rational(full_det, Integer(minor_det * cleared));
  }
  throw DegenerateSpecializationError(
      "Macaulay quotient stayed 0/0 after " + std::to_string(options.max_retries) +
      " unimodular retries");
}

Rational resultant(const HomogeneousLift& lift) {
  return lift.N() == 1 ? sylvester_resultant(lift) : macaulay_resultant(lift);
}

bool is_morphism(const HomogeneousLift& lift) { return resultant(lift) != 0; }

}  // namespace gmm
