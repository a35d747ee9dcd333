#include "hopftwist/lattice.hpp"

#include <algorithm>

namespace hopftwist {

namespace {

void col_axpy(ZMat& m, Eigen::Index dst, const Integer& q, Eigen::Index src) {
  if (sgn(q) == 0) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}

void col_swap(ZMat& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

void col_negate(ZMat& m, Eigen::Index c) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ColumnHermite column_hermite(ZMat a, bool with_transform) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  ZMat u;
  if (with_transform) u = ZMat::Identity(cols, cols);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < rows && c < cols; ++i) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = c; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (best < 0 || abs(a(i, j)) < abs(a(i, best)))) best = j;
      if (best < 0) break;
      col_swap(a, c, best);
      if (with_transform) col_swap(u, c, best);
      bool others = false;
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        const Integer q = floor_div(a(i, j), a(i, c));
        col_axpy(a, j, q, c);
        if (with_transform) col_axpy(u, j, q, c);
        if (sgn(a(i, j)) != 0) others = true;
      }
      if (!others) break;
    }
    if (c >= cols || sgn(a(i, c)) == 0) continue;
    if (sgn(a(i, c)) < 0) {
      col_negate(a, c);
      if (with_transform) col_negate(u, c);
    }
    for (Eigen::Index j = 0; j < c; ++j) {
      const Integer q = floor_div(a(i, j), a(i, c));
      col_axpy(a, j, q, c);
      if (with_transform) col_axpy(u, j, q, c);
    }
    ++c;
  }
  ColumnHermite out;
  out.basis = a.leftCols(c);
  if (with_transform) out.transform = u;
  return out;
}

ZMat integer_kernel(const ZMat& a) {
  ColumnHermite h = column_hermite(a, true);
  const Eigen::Index r = h.basis.cols();
  return h.transform.rightCols(a.cols() - r);
}

Integer clear_denominators(const QMat& a, ZMat& out) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Integer& d = a(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  out.resize(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Rational v = a(i, j) * l;
      out(i, j) = v.get_num();
    }
  return l;
}

QMat restrict_scalars(const Mat& gens, const RingSpec& r) {
  const int d = r.degree();
  const Eigen::Index m = gens.rows(), k = gens.cols();
  QMat out(d * m, d * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (int t = 0; t < d; ++t) {
      std::vector<Rational> bt(d);
      for (int s = 0; s < d; ++s) bt[s] = r.basis()(s, t);
      const FieldElem b = r.from_coords(bt);
      for (Eigen::Index row = 0; row < m; ++row) {
        const std::vector<Rational> c = r.order_coords(gens(row, i) * b);
        for (int s = 0; s < d; ++s) out(row * d + s, i * d + t) = c[s];
      }
    }
  return out;
}

Vec extend_scalars(const QMat& col, const RingSpec& r) {
  const int d = r.degree();
  const Eigen::Index m = col.rows() / d;
  Vec v(m);
  for (Eigen::Index row = 0; row < m; ++row) {
    std::vector<Rational> c(d);
    for (int s = 0; s < d; ++s) c[s] = col(row * d + s, 0);
    v(row) = r.from_order_coords(c);
  }
  return v;
}

QMat base_lattice_basis(const QMat& gens) {
  ZMat z;
  const Integer l = clear_denominators(gens, z);
  const ColumnHermite h = column_hermite(z, false);
  QMat out(h.basis.rows(), h.basis.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = Rational(h.basis(i, j)) / l;
      out(i, j).canonicalize();
    }
  return out;
}

namespace {

bool base_contains(const QMat& big_basis, const QMat& small, const RingSpec& r) {
  if (small.cols() == 0) return true;
  auto x = solve(big_basis, small);
  if (!x) return false;
  for (Eigen::Index i = 0; i < x->rows(); ++i)
    for (Eigen::Index j = 0; j < x->cols(); ++j)
      if (!r.rational_in_base((*x)(i, j))) return false;
  return true;
}

// Z-basis of (Q-span of gens) intersected with Z^N.
QMat rational_saturation(const QMat& gens) {
  const Eigen::Index n = gens.rows();
  QMat t = gens.transpose();
  QMat comp = kernel(t);  // columns span the orthogonal complement
  ZMat c;
  clear_denominators(QMat(comp.transpose()), c);
  ZMat k = c.rows() == 0 ? ZMat(ZMat::Identity(n, n)) : integer_kernel(c);
  QMat out(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < k.cols(); ++j) out(i, j) = Rational(k(i, j));
  return out;
}

}  // namespace

bool lattice_contains(const Mat& big, const Mat& small, const RingSpec& r) {
  if (big.rows() != small.rows()) throw Error(ErrorKind::DimensionMismatch, "lattices in different ambient ranks");
  if (small.cols() == 0) return true;
  if (big.cols() == 0) return is_zero_matrix(small);
  return base_contains(base_lattice_basis(restrict_scalars(big, r)), restrict_scalars(small, r), r);
}

bool lattice_equal(const Mat& a, const Mat& b, const RingSpec& r) {
  return lattice_contains(a, b, r) && lattice_contains(b, a, r);
}

namespace {

// Row-echelon basis of the K-span, returned as columns whose pivot rows form
// an identity block.
Mat echelon_basis(const Mat& gens) {
  auto [e, pivots] = rref(Mat(gens.transpose()));
  return e.transpose();
}

bool try_candidate_basis(const Mat& cand, const QMat& sat_base, const RingSpec& r) {
  return base_contains(base_lattice_basis(restrict_scalars(cand, r)), sat_base, r);
}

}  // namespace

Mat saturated_basis(const Mat& gens, const RingSpec& r) {
  if (gens.cols() == 0) return Mat(gens.rows(), 0);
  Mat ech = echelon_basis(gens);
  if (ech.cols() == 0) return ech;
  if (matrix_in_ring(ech, r)) return ech;

  // Slow path: compute the saturated lattice over Z_S and search its basis
  // vectors for an R-basis.
  const QMat sat = rational_saturation(restrict_scalars(ech, r));
  const Eigen::Index rk = ech.cols();
  std::vector<Vec> cands;
  for (Eigen::Index j = 0; j < sat.cols(); ++j) cands.push_back(extend_scalars(sat.col(j), r));
  const std::size_t base = cands.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base; ++j) {
      cands.push_back(cands[i] + cands[j]);
      cands.push_back(cands[i] - cands[j]);
    }
  // Greedy: walk candidates, keep K-independent ones, test when full.
  for (std::size_t start = 0; start < cands.size(); ++start) {
    Mat pick(ech.rows(), 0);
    for (std::size_t s = 0; s < cands.size() && pick.cols() < rk; ++s) {
      const Vec& v = cands[(start + s) % cands.size()];
      Mat trial(pick.rows(), pick.cols() + 1);
      trial << pick, v;
      if (rank(trial) == trial.cols()) pick = trial;
    }
    if (pick.cols() == rk && try_candidate_basis(pick, sat, r)) return pick;
  }
  throw Error(ErrorKind::LatticeNotFree, "no R-basis found for the saturated lattice");
}

bool is_saturated(const Mat& gens, const RingSpec& r) {
  if (gens.cols() == 0) return true;
  const QMat own = restrict_scalars(gens, r);
  const QMat sat = rational_saturation(own);
  return base_contains(base_lattice_basis(own), sat, r);
}

bool has_unit_determinant(const Mat& m, const RingSpec& r) {
  const FieldElem d = determinant(m);
  if (d.is_zero()) return false;
  return r.is_unit(d);
}

}  // namespace hopftwist
