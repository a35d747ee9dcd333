#include "hopftwist/symbundle.hpp"

namespace hopftwist {

SymBundle::SymBundle(RingSpec ring, Mat gram) : ring_(std::move(ring)), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
}

SymBundle::SymBundle(Comodule module, Mat gram)
    : ring_(module.ring()), module_(std::move(module)), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() != module_->rank())
    throw Error(ErrorKind::DimensionMismatch, "Gram matrix does not match the module rank");
}

bool SymBundle::is_symmetric() const { return matrices_equal(gram_, Mat(gram_.transpose())); }

bool SymBundle::is_nondegenerate() const { return has_unit_determinant(gram_, ring_); }

bool is_equivariant(const SymBundle& b) {
  if (!b.module()) return false;
  const Comodule& m = *b.module();
  const HopfAlgebra& h = m.hopf();
  const Mat& q = b.gram();
  for (int k = 0; k < h.rank(); ++k) {
    const Mat lhs = sparse_product(Mat(m.action(k).transpose()), q);
    const Mat rhs = sparse_product(q, m.action(Vec(h.antipode().row(k).transpose())));
    if (!matrices_equal(lhs, rhs)) return false;
  }
  return true;
}

namespace {

void check_fixed_form_preconditions(const SymBundle& b) {
  if (!b.module()) throw Error(ErrorKind::NotEquivariant, "bundle has no comodule structure");
  if (!check_H1(dual(b.module()->hopf()))) throw Error(ErrorKind::H1Failure, "A^D does not satisfy H1");
  if (!is_equivariant(b)) throw Error(ErrorKind::NotEquivariant, "form is not equivariant");
}

FixedForm fixed_form_certified(const SymBundle& b, const Vec& theta_dual, const Mat& free_basis) {
  const Comodule& m = *b.module();
  FixedForm out;
  out.free_basis = free_basis;
  out.basis = fixed_points(m);
  const Mat t = m.action(theta_dual);
  auto pre = solve(t, out.basis);
  if (!pre) throw Error(ErrorKind::H1Failure, "fixed vectors are not in the image of theta_dual");
  out.preimages = *pre;
  const Mat& q = b.gram();
  out.gram = sparse_product(Mat(out.preimages.transpose()), sparse_product(q, out.basis));

  // shift every preimage by a kernel vector of theta_dual and recompute
  const Mat ker = kernel(t);
  Mat shifted = out.preimages;
  for (Eigen::Index j = 0; j < shifted.cols() && ker.cols() > 0; ++j)
    shifted.col(j) += FieldElem(static_cast<long>(j + 1)) * ker.col(j % ker.cols());
  const Mat g2 = sparse_product(Mat(shifted.transpose()), sparse_product(q, out.basis));
  out.well_defined = matrices_equal(out.gram, g2) && matrices_equal(out.gram, Mat(out.gram.transpose()));
  if (!has_unit_determinant(out.gram, m.ring()))
    throw Error(ErrorKind::SingularForm, "fixed form is not a perfect pairing");
  return out;
}

}  // namespace

FixedForm fixed_form(const SymBundle& b, const Vec& theta_dual) {
  check_fixed_form_preconditions(b);
  auto free = free_basis_over_dual(*b.module());
  if (!free) throw Error(ErrorKind::FreenessUncertified, "no A^D-basis of the module was found");
  return fixed_form_certified(b, theta_dual, *free);
}

FixedForm fixed_form(const SymBundle& b, const Vec& theta_dual, const Mat& free_basis) {
  check_fixed_form_preconditions(b);
  if (!is_free_basis(*b.module(), free_basis))
    throw Error(ErrorKind::FreenessUncertified, "supplied vectors are not an A^D-basis");
  return fixed_form_certified(b, theta_dual, free_basis);
}

Mat fixed_form_on(const SymBundle& b, const Vec& theta_dual, const Mat& fixed_vectors) {
  if (!b.module()) throw Error(ErrorKind::NotEquivariant, "bundle has no comodule structure");
  auto pre = solve(b.module()->action(theta_dual), fixed_vectors);
  if (!pre) throw Error(ErrorKind::H1Failure, "vectors are not in the image of theta_dual");
  return sparse_product(Mat(pre->transpose()), sparse_product(b.gram(), fixed_vectors));
}

bool verify_isometry(const Mat& p, const Mat& g1, const Mat& g2, const RingSpec& r) {
  if (p.rows() != g1.rows() || p.cols() != g2.rows() || g1.rows() != g2.rows())
    throw Error(ErrorKind::DimensionMismatch, "isometry witness has wrong shape");
  if (!matrix_in_ring(p, r)) return false;
  auto inv = inverse(p);
  if (!inv || !matrix_in_ring(*inv, r)) return false;
  return matrices_equal(sparse_product(Mat(p.transpose()), sparse_product(g1, p)), g2);
}

bool verify_isometry(const Mat& p, const SymBundle& b1, const SymBundle& b2) {
  return verify_isometry(p, b1.gram(), b2.gram(), b1.ring());
}

FieldElem discriminant(const SymBundle& b) { return determinant(b.gram()); }

bool same_square_class(const FieldElem& d1, const FieldElem& d2, const FieldElem& s) { return d1 == d2 * s * s; }

}  // namespace hopftwist
