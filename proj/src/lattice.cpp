#include "gmm/lattice.hpp"

#include <algorithm>

#include "gmm/errors.hpp"

namespace gmm {

Lattice Lattice::canonical(const RationalMatrix& rows) {
  auto cleared = clear_denominators(rows);
  IntegerMatrix h = hermite_normal_form(cleared.matrix);
  Integer content = 0;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) content = gcd(content, h(i, j));
  const Integer g = gcd(cleared.denominator, content);
  if (g != 1) h /= g;
  return Lattice(make_rational(1, Integer(cleared.denominator / g)), std::move(h));
}

Lattice Lattice::standard(int n) {
  return Lattice(1, IntegerMatrix::Identity(n, n));
}

Lattice Lattice::from_generators(const std::vector<RationalVector>& rows, int n) {
  if (n < 1) throw DomainError("lattice dimension must be positive");
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw DomainError("generator has the wrong length");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return canonical(m);
}

Lattice Lattice::column_span(const RationalMatrix& a) {
  if (a.rows() < 1) throw DomainError("empty matrix");
  return canonical(a.transpose());
}

RationalMatrix Lattice::basis() const { return to_rational(hermite_) * scale_; }

RationalMatrix Lattice::generator_matrix() const { return basis().transpose(); }

bool Lattice::contains(const RationalVector& v) const {
  const Eigen::Index n = hermite_.rows();
  if (v.size() != n) throw DomainError("vector has the wrong length");
  // v = x * basis with basis upper triangular: forward substitution.
  const RationalMatrix b = basis();
  std::vector<Rational> x(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational rest = v(j);
    for (Eigen::Index i = 0; i < j; ++i) rest -= x[i] * b(i, j);
    x[j] = rest / b(j, j);
    if (!is_integer(x[j])) return false;
  }
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  const RationalMatrix b = other.basis();
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    if (!contains(RationalVector(b.row(i).transpose()))) return false;
  return true;
}

Rational Lattice::covolume() const {
  Rational out = pow(scale_, static_cast<long>(hermite_.rows()));
  for (Eigen::Index i = 0; i < hermite_.rows(); ++i) out *= hermite_(i, i);
  return out;
}

Lattice lattice_from_generators(const std::vector<RationalVector>& rows, int n) {
  return Lattice::from_generators(rows, n);
}

Lattice transform(const RationalMatrix& a, const Lattice& lattice) {
  return Lattice::column_span(a * lattice.generator_matrix());
}

bool LocalLatticeData::is_trivial() const {
  return std::all_of(elementary_orders.begin(), elementary_orders.end(),
                     [](long e) { return e == 0; });
}

LocalLatticeData localize(const Lattice& lattice, const Prime& p) {
  const auto smith = smith_normal_form(lattice.hermite());
  const long shift = ord_p(lattice.scale(), p).value();
  LocalLatticeData out{p, {}};
  for (Eigen::Index i = 0; i < smith.diagonal.rows(); ++i)
    out.elementary_orders.push_back(shift + ord_p(smith.diagonal(i, i), p).value());
  std::sort(out.elementary_orders.begin(), out.elementary_orders.end());
  return out;
}

std::vector<Prime> support_primes(const Lattice& lattice) {
  Integer candidates = denominator(lattice.scale());
  for (Eigen::Index i = 0; i < lattice.hermite().rows(); ++i)
    candidates *= lattice.hermite()(i, i);
  std::vector<Prime> out;
  for (const auto& [p, e] : factor(candidates))
    if (!localize(lattice, p).is_trivial()) out.push_back(p);
  return out;
}

RationalMatrix prescribed_local_generator(const Prime& p, const RationalMatrix& a) {
  if (a.rows() != a.cols() || determinant(a) == 0)
    throw DomainError("prescribed local generator needs an invertible matrix");
  const auto cleared = clear_denominators(a);
  const auto smith = smith_normal_form(cleared.matrix);
  const Eigen::Index n = a.rows();
  RationalMatrix local_diagonal = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    local_diagonal(i, i) = pow(Rational(p.value()), ord_p(smith.diagonal(i, i), p).value());
  const Rational shift = pow(Rational(p.value()), -ord_p(cleared.denominator, p).value());
  return to_rational(smith.left) * local_diagonal * shift;
}

Lattice dual(const Lattice& lattice) {
  const RationalMatrix dual_rows = inverse(lattice.basis()).transpose();
  return Lattice::column_span(dual_rows.transpose());
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DomainError("intersecting lattices of different dimension");
  // (A n B)^* = A^* + B^*.
  const RationalMatrix da = dual(a).basis(), db = dual(b).basis();
  RationalMatrix stacked(da.rows() + db.rows(), da.cols());
  stacked << da, db;
  return dual(Lattice::column_span(stacked.transpose()));
}

Lattice glue_local(const LocalData& data, int n) {
  if (data.empty()) return Lattice::standard(n);
  std::map<Prime, RationalMatrix> generators;
  std::map<Prime, long> slack;
  for (const auto& [p, a] : data) {
    if (a.rows() != n || a.cols() != n) throw DomainError("local matrix has the wrong size");
    RationalMatrix h = prescribed_local_generator(p, a);
    slack[p] = std::max(0L, -min_order(h, p).value());
    generators.emplace(p, std::move(h));
  }
  // Each prime's generator is loosened by q^{-slack_q} at the other support
  // primes so it does not constrain them.
  std::optional<Lattice> out;
  for (const auto& [p, h] : generators) {
    Rational loosen = 1;
    for (const auto& [q, t] : slack)
      if (q != p) loosen *= pow(Rational(q.value()), -t);
    Lattice piece = Lattice::column_span(h * loosen);
    out = out ? intersect(*out, piece) : piece;
  }
  return *out;
}

AdeleMatrix::AdeleMatrix(int n) : default_(RationalMatrix::Identity(n, n)) {}

AdeleMatrix::AdeleMatrix(int n, LocalData support)
    : AdeleMatrix(RationalMatrix::Identity(n, n), std::move(support)) {}

AdeleMatrix::AdeleMatrix(RationalMatrix default_component, LocalData support)
    : default_(std::move(default_component)), support_(std::move(support)) {
  const auto n = default_.rows();
  if (n < 1 || default_.cols() != n || determinant(default_) == 0)
    throw DomainError("adele default component must be invertible");
  for (const auto& [p, a] : support_) {
    if (a.rows() != n || a.cols() != n)
      throw DomainError("adele component at " + p.str() + " has the wrong size");
    if (determinant(a) == 0)
      throw DomainError("adele component at " + p.str() + " is singular");
  }
  normalize();
}

void AdeleMatrix::normalize() {
  std::erase_if(support_, [&](const auto& entry) { return entry.second == default_; });
}

const RationalMatrix& AdeleMatrix::at(const Prime& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? default_ : it->second;
}

AdeleMatrix AdeleMatrix::inverse() const {
  LocalData inv;
  for (const auto& [p, a] : support_) inv.emplace(p, gmm::inverse(a));
  return AdeleMatrix(gmm::inverse(default_), std::move(inv));
}

AdeleMatrix operator*(const AdeleMatrix& a, const AdeleMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("multiplying adeles of different size");
  LocalData product;
  for (const auto& [p, m] : a.support_) product.emplace(p, m * b.at(p));
  for (const auto& [p, m] : b.support_)
    if (!product.contains(p)) product.emplace(p, a.at(p) * m);
  return AdeleMatrix(a.default_ * b.default_, std::move(product));
}

bool AdeleMatrix::in_standard_stabilizer() const {
  for (const auto& [p, a] : support_)
    if (!is_p_unimodular(a, p)) return false;
  // Off the support the default must be integral with unit determinant; all
  // obstructions divide the entry denominators or the determinant numerator.
  Integer obstruction = numerator(determinant(default_));
  for (Eigen::Index i = 0; i < default_.rows(); ++i)
    for (Eigen::Index j = 0; j < default_.cols(); ++j)
      obstruction *= denominator(default_(i, j));
  if (obstruction < 0) obstruction = -obstruction;
  for (const auto& [p, a] : support_)
    while (obstruction % p.value() == 0) obstruction /= p.value();
  return obstruction == 1;
}

Lattice act(const AdeleMatrix& a, const Lattice& lattice) {
  if (a.dim() != lattice.dim()) throw DomainError("adele and lattice differ in dimension");
  // Peel off the default component as a principal factor.
  const RationalMatrix& d = a.default_component();
  const Lattice shifted = transform(d, lattice);
  const RationalMatrix b = shifted.generator_matrix();
  const RationalMatrix b_inv = inverse(b), d_inv = inverse(d);
  LocalData local;
  for (const auto& [p, m] : a.support()) local.emplace(p, b_inv * m * d_inv * b);
  return transform(b, glue_local(local, a.dim()));
}

AdelicFactorization adelic_factorize(const AdeleMatrix& a) {
  // X = A^{-1} . Z^n = G Z^n; then A_p G fixes Z_p^n everywhere.
  const Lattice x = act(a.inverse(), Lattice::standard(a.dim()));
  const RationalMatrix g = x.generator_matrix();
  return {a * AdeleMatrix::principal(g), inverse(g)};
}

}  // namespace gmm
