#include "hopftwist/algebra.hpp"

namespace hopftwist {

FiniteAlgebra::FiniteAlgebra(RingSpec ring, std::vector<Mat> left, Vec unit)
    : ring_(std::move(ring)), n_(static_cast<int>(left.size())), left_(std::move(left)), unit_(std::move(unit)) {
  if (unit_.size() != n_) throw Error(ErrorKind::DimensionMismatch, "unit vector has wrong length");
  for (const auto& l : left_)
    if (l.rows() != n_ || l.cols() != n_) throw Error(ErrorKind::DimensionMismatch, "structure matrix has wrong shape");
}

FiniteAlgebra FiniteAlgebra::from_products(RingSpec ring, int n, const std::function<Vec(int, int)>& product,
                                           Vec unit) {
  std::vector<Mat> left(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec p = product(i, j);
      if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "product vector has wrong length");
      left[i].col(j) = p;
    }
  return FiniteAlgebra(std::move(ring), std::move(left), std::move(unit));
}

AlgebraElem FiniteAlgebra::basis_vector(int i) const {
  AlgebraElem v = AlgebraElem::Zero(n_);
  v(i) = 1;
  return v;
}

Mat FiniteAlgebra::left_mult_matrix(const AlgebraElem& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  Mat m = Mat::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (x(i).is_zero()) continue;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!left_[i](r, c).is_zero()) m(r, c) += x(i) * left_[i](r, c);
  }
  return m;
}

Mat FiniteAlgebra::right_mult_matrix(const AlgebraElem& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  Mat m = Mat::Zero(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      if (x(i).is_zero()) continue;
      // e_j * e_i = left_[j].col(i)
      for (int k = 0; k < n_; ++k)
        if (!left_[j](k, i).is_zero()) m(k, j) += x(i) * left_[j](k, i);
    }
  return m;
}

AlgebraElem FiniteAlgebra::multiply(const AlgebraElem& x, const AlgebraElem& y) const {
  if (y.size() != n_) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  return sparse_product(left_mult_matrix(x), y);
}

FieldElem FiniteAlgebra::regular_trace(const AlgebraElem& x) const {
  FieldElem t = ring_.zero();
  for (int i = 0; i < n_; ++i) {
    if (x(i).is_zero()) continue;
    FieldElem ti = ring_.zero();
    for (int k = 0; k < n_; ++k) ti += left_[i](k, k);
    t += x(i) * ti;
  }
  return t;
}

Mat FiniteAlgebra::trace_gram(const FieldElem& scale) const {
  std::vector<FieldElem> tr(n_);
  for (int i = 0; i < n_; ++i) tr[i] = regular_trace(basis_vector(i));
  const FieldElem s2 = scale * scale;
  Mat g(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      FieldElem v = ring_.zero();
      for (int k = 0; k < n_; ++k)
        if (!left_[i](k, j).is_zero()) v += left_[i](k, j) * tr[k];
      g(i, j) = s2 * v;
    }
  return g;
}

bool FiniteAlgebra::is_commutative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!matrices_equal(left_[i].col(j), left_[j].col(i))) return false;
  return true;
}

std::vector<std::string> FiniteAlgebra::validate() const {
  std::vector<std::string> failures;
  bool integral = matrix_in_ring(unit_, ring_);
  for (const auto& l : left_) integral = integral && matrix_in_ring(l, ring_);
  if (!integral) failures.push_back("integrality");

  bool assoc = true;
  for (int i = 0; i < n_ && assoc; ++i)
    for (int j = 0; j < n_ && assoc; ++j) {
      // (e_i e_j) e_k = e_i (e_j e_k) for all k, i.e. L_{e_i e_j} = L_i L_j
      const Mat lhs = left_mult_matrix(left_[i].col(j));
      const Mat rhs = sparse_product(left_[i], left_[j]);
      assoc = matrices_equal(lhs, rhs);
    }
  if (!assoc) failures.push_back("associativity");

  const Mat lu = left_mult_matrix(unit_);
  const Mat ru = right_mult_matrix(unit_);
  const Mat id = Mat::Identity(n_, n_);
  if (!matrices_equal(lu, id) || !matrices_equal(ru, id)) failures.push_back("unit");
  return failures;
}

FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int na = a.rank(), nb = b.rank();
  std::vector<Mat> left;
  left.reserve(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) left.push_back(kron(a.left_matrices()[i], b.left_matrices()[j]));
  Vec unit = kron(a.unit(), b.unit());
  return FiniteAlgebra(a.ring(), std::move(left), std::move(unit));
}

}  // namespace hopftwist
