#include "gmm/reduction.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gmm/errors.hpp"
#include "gmm/lattice.hpp"
#include "gmm/resultant.hpp"

namespace gmm {

namespace {

Order min_coefficient_order(const HomogeneousLift& lift, const Prime& p) {
  Order best = Order::infinity();
  for (const auto& c : lift.coefficients()) best = std::min(best, ord_p(c, p));
  return best;
}

Rational p_power(const Prime& p, long e) { return pow(Rational(p.value()), e); }

using ClassKey = std::vector<Integer>;

// Homothety class of T Z_p^n; T has entries in Z[1/p] and det a power of p,
// so the global lattice T Z^n is determined by its localization at p.
ClassKey class_key(const RationalMatrix& t) {
  const Lattice l = Lattice::column_span(t);
  Integer content = 0;
  const IntegerMatrix& h = l.hermite();
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) content = gcd(content, h(i, j));
  ClassKey key;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j) key.push_back(h(i, j) / content);
  return key;
}

struct Node {
  RationalMatrix lattice;     // T
  RationalMatrix conjugator;  // T^{-1}
  HomogeneousLift lift;
  Rational scalar;
  long valuation;
  int depth;
  ClassKey key;
};

bool better(const Node& a, const Node& b) {
  if (a.valuation != b.valuation) return a.valuation < b.valuation;
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.key < b.key;
}

long ord_res(const HomogeneousLift& lift, const Prime& p) {
  const Order v = ord_p(resultant(lift), p);
  if (v.is_infinite()) throw DomainError("lift is not a morphism");
  return v.value();
}

}  // namespace

bool is_p_integral(const HomogeneousLift& lift, const Prime& p) {
  return min_coefficient_order(lift, p) >= Order(0);
}

HomogeneousLift p_integral_scale(const HomogeneousLift& lift, const Prime& p) {
  const long k = std::max(0L, -min_coefficient_order(lift, p).value());
  return k == 0 ? lift : scale(lift, p_power(p, k));
}

PScaledLift p_primitive_scale(const HomogeneousLift& lift, const Prime& p) {
  const long k = -min_coefficient_order(lift, p).value();
  return {k == 0 ? lift : scale(lift, p_power(p, k)), k};
}

bool has_unit_resultant(const HomogeneousLift& lift, const Prime& p) {
  if (!is_p_integral(lift, p))
    throw DomainError("lift is not " + p.str() + "-integral");
  return ord_p(resultant(lift), p) == Order(0);
}

std::vector<RationalMatrix> neighbor_moves(int n, const Prime& p) {
  if (n < 2) throw DomainError("neighbor moves need n >= 2");
  if (p.value() > 1000)
    throw DomainError("neighbor enumeration is limited to p <= 1000");
  const long q = p.value().convert_to<long>();
  std::vector<RationalMatrix> sublattices;

  // Reduced row echelon forms over F_p: pivot sets, then free entries.
  for (int k = 1; k < n; ++k) {
    std::vector<int> pivots(k);
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    do {
      for (int j = 0, i = 0; j < n; ++j)
        if (choose[j]) pivots[i++] = j;
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!choose[j]) free.emplace_back(i, j);
      std::vector<long> digits(free.size(), 0);
      for (;;) {
        IntegerMatrix gens = IntegerMatrix::Zero(k + n, n);
        for (int i = 0; i < k; ++i) gens(i, pivots[i]) = 1;
        for (std::size_t f = 0; f < free.size(); ++f)
          gens(free[f].first, free[f].second) = digits[f];
        for (int j = 0; j < n; ++j) gens(k + j, j) = p.value();
        sublattices.push_back(to_rational(hermite_normal_form(gens)).transpose());
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
        if (f == digits.size()) break;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  std::vector<RationalMatrix> moves = sublattices;
  for (const auto& t : sublattices) moves.push_back(inverse(t));
  return moves;
}

LocalModelSearchResult minimize_local(const HomogeneousLift& lift, const Prime& p,
                                      int radius) {
  if (radius < 0) throw DomainError("negative search radius");
  const int n = lift.num_vars(), d = lift.degree(), N = lift.N();
  const long c_exp = conjugation_exponent(N, d), s_exp = scaling_exponent(N, d);
  const long input_valuation = ord_res(lift, p);

  auto root_scaled = p_primitive_scale(lift, p);
  Node root{RationalMatrix::Identity(n, n), RationalMatrix::Identity(n, n),
            std::move(root_scaled.lift), p_power(p, root_scaled.shift), 0, 0,
            class_key(RationalMatrix::Identity(n, n))};
  root.valuation = ord_res(root.lift, p);
  if (root.valuation != input_valuation + s_exp * root_scaled.shift)
    throw std::logic_error("valuation audit failed at the root");

  const auto moves = neighbor_moves(n, p);
  std::vector<Order> move_det_orders;
  for (const auto& m : moves) move_det_orders.push_back(ord_p(determinant(m), p));

  std::set<ClassKey> visited{root.key};
  Node best = root;
  std::vector<Node> frontier{root};
  for (int depth = 1; depth <= radius && best.valuation > 0 && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (std::size_t k = 0; k < moves.size(); ++k) {
        RationalMatrix t = node.lattice * moves[k];
        ClassKey key = class_key(t);
        if (!visited.insert(key).second) continue;
        // Conjugating by T^{-1} moves from the parent class to this one.
        const RationalMatrix step = inverse(moves[k]);
        auto scaled = p_primitive_scale(conjugate(node.lift, step), p);
        Node child{std::move(t), step * node.conjugator, std::move(scaled.lift),
                   node.scalar * p_power(p, scaled.shift), 0, depth, std::move(key)};
        child.valuation = ord_res(child.lift, p);
        const long predicted =
            node.valuation - c_exp * move_det_orders[k].value() + s_exp * scaled.shift;
        if (child.valuation != predicted)
          throw std::logic_error("valuation audit failed during local search");
        next.push_back(std::move(child));
      }
    }
    for (const auto& node : next)
      if (better(node, best)) best = node;
    frontier = std::move(next);
  }

  return {Model(best.lift, best.conjugator, best.scalar, lift), best.valuation,
          best.valuation > 0, visited.size()};
}

std::vector<Prime> bad_primes(const HomogeneousLift& lift) {
  const auto primitive = primitive_part(lift);
  const Rational res = resultant(primitive.lift);
  if (res == 0) throw DomainError("lift is not a morphism");
  std::set<Prime> out;
  for (const auto& c : primitive.lift.coefficients())
    if (denominator(c) != 1)
      for (auto& pp : factor(Integer(denominator(c)))) out.insert(pp.prime);
  for (const Integer& part : {Integer(numerator(res)), Integer(denominator(res))})
    for (auto& pp : factor(part)) out.insert(pp.prime);
  return {out.begin(), out.end()};
}

}  // namespace gmm
