#include "gmm/normal_forms.hpp"

#include "gmm/errors.hpp"

namespace gmm {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

IntegerMatrix hermite_normal_form(const IntegerMatrix& input) {
  IntegerMatrix h = input;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  if (rows < cols) throw DomainError("fewer generators than the dimension");

  for (Eigen::Index col = 0; col < cols; ++col) {
    // Euclid on column `col` among rows col..rows-1 until one nonzero remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = col; r < rows; ++r) {
        if (h(r, col) == 0) continue;
        if (best < 0 || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best < 0) throw DomainError("generators do not span a full-rank lattice");
      h.row(col).swap(h.row(best));
      bool done = true;
      for (Eigen::Index r = col + 1; r < rows; ++r) {
        if (h(r, col) == 0) continue;
        const Integer q = h(r, col) / h(col, col);
        h.row(r) -= q * h.row(col);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(col, col) < 0) h.row(col) = -h.row(col);
    for (Eigen::Index r = 0; r < col; ++r) {
      const Integer q = floor_div(h(r, col), h(col, col));
      if (q != 0) h.row(r) -= q * h.row(col);
    }
  }
  return h.topRows(cols);
}

namespace {

// Keeps m == left * work * right through every elementary operation.
struct SmithState {
  IntegerMatrix left, work, right;

  void add_row(Eigen::Index i, Eigen::Index j, const Integer& k) {
    work.row(i) += k * work.row(j);
    left.col(j) -= k * left.col(i);
  }
  void add_col(Eigen::Index i, Eigen::Index j, const Integer& k) {
    work.col(i) += k * work.col(j);
    right.row(j) -= k * right.row(i);
  }
  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    work.row(i).swap(work.row(j));
    left.col(i).swap(left.col(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    work.col(i).swap(work.col(j));
    right.row(i).swap(right.row(j));
  }
  void negate_row(Eigen::Index i) {
    work.row(i) = -work.row(i);
    left.col(i) = -left.col(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("Smith form needs a square matrix");
  if (bareiss_determinant(m) == 0) throw DomainError("Smith form of a singular matrix");
  SmithState s{IntegerMatrix::Identity(n, n), m, IntegerMatrix::Identity(n, n)};
  auto& w = s.work;

  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < n; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (w(i, j) != 0 && (pr < 0 || abs(w(i, j)) < abs(w(pr, pc)))) {
            pr = i;
            pc = j;
          }
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (w(i, t) == 0) continue;
        s.add_row(i, t, Integer(-(w(i, t) / w(t, t))));
        if (w(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (w(t, j) == 0) continue;
        s.add_col(j, t, Integer(-(w(t, j) / w(t, t))));
        if (w(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into row t and retry.
      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < n && offender < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (w(i, j) % w(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender < 0) break;
      s.add_row(t, offender, 1);
    }
    if (w(t, t) < 0) s.negate_row(t);
  }
  return {std::move(s.left), std::move(s.work), std::move(s.right)};
}

}  // namespace gmm
