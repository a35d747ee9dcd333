#include "hopftwist/hopf.hpp"

#include <algorithm>

namespace hopftwist {

HopfAlgebra::HopfAlgebra(FiniteAlgebra alg, Mat comult, Vec counit, Mat antipode)
    : alg_(std::move(alg)), comult_(std::move(comult)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
  const int n = alg_.rank();
  if (comult_.rows() != n * n || comult_.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "comultiplication must be n^2 x n");
  if (counit_.size() != n) throw Error(ErrorKind::DimensionMismatch, "counit must have length n");
  if (antipode_.rows() != n || antipode_.cols() != n) throw Error(ErrorKind::DimensionMismatch, "antipode must be n x n");
}

FieldElem HopfAlgebra::counit_of(const AlgebraElem& x) const {
  FieldElem s = ring().zero();
  for (int i = 0; i < rank(); ++i)
    if (!x(i).is_zero() && !counit_(i).is_zero()) s += x(i) * counit_(i);
  return s;
}

Vec HopfAlgebra::comultiply(const AlgebraElem& x) const { return sparse_product(comult_, x); }

Mat HopfAlgebra::regular_dual_action(int k) const {
  const int n = rank();
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(j, i) = comult_(j * n + k, i);
  return m;
}

Mat HopfAlgebra::regular_dual_action(const Vec& g) const {
  const int n = rank();
  Mat m = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    if (g(k).is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!comult_(j * n + k, i).is_zero()) m(j, i) += g(k) * comult_(j * n + k, i);
  }
  return m;
}

bool HopfReport::has(const std::string& name) const {
  return std::find(failures.begin(), failures.end(), name) != failures.end();
}

namespace {

// Coefficient vector of (Delta (x) id) Delta(e_i) and (id (x) Delta) Delta(e_i),
// both indexed (a*n + b)*n + c.
bool coassociative(const HopfAlgebra& h) {
  const int n = h.rank();
  const Mat& d = h.comult();
  for (int i = 0; i < n; ++i) {
    Vec lhs = Vec::Zero(n * n * n), rhs = Vec::Zero(n * n * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const FieldElem& c = d(j * n + k, i);
        if (c.is_zero()) continue;
        for (int ab = 0; ab < n * n; ++ab) {
          if (!d(ab, j).is_zero()) lhs(ab * n + k) += c * d(ab, j);
          if (!d(ab, k).is_zero()) rhs(j * n * n + ab) += c * d(ab, k);
        }
      }
    if (!matrices_equal(lhs, rhs)) return false;
  }
  return true;
}

bool counital(const HopfAlgebra& h) {
  const int n = h.rank();
  const Mat& d = h.comult();
  for (int i = 0; i < n; ++i) {
    Vec left = Vec::Zero(n), right = Vec::Zero(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const FieldElem& c = d(j * n + k, i);
        if (c.is_zero()) continue;
        left(k) += h.counit()(j) * c;
        right(j) += h.counit()(k) * c;
      }
    const Vec ei = h.algebra().basis_vector(i);
    if (!matrices_equal(left, ei) || !matrices_equal(right, ei)) return false;
  }
  return true;
}

bool antipode_law(const HopfAlgebra& h) {
  const int n = h.rank();
  const Mat& d = h.comult();
  const FiniteAlgebra& a = h.algebra();
  for (int i = 0; i < n; ++i) {
    Vec left = Vec::Zero(n), right = Vec::Zero(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const FieldElem& c = d(j * n + k, i);
        if (c.is_zero()) continue;
        left += c * a.multiply(h.antipode().col(j), a.basis_vector(k));
        right += c * a.multiply(a.basis_vector(j), h.antipode().col(k));
      }
    const Vec expect = h.counit()(i) * a.unit();
    if (!matrices_equal(left, expect) || !matrices_equal(right, expect)) return false;
  }
  return true;
}

bool comult_multiplicative(const HopfAlgebra& h) {
  const int n = h.rank();
  const FiniteAlgebra& a = h.algebra();
  const FiniteAlgebra aa = tensor_algebra(a, a);
  if (!matrices_equal(h.comultiply(a.unit()), aa.unit())) return false;
  for (int i = 0; i < n; ++i) {
    const Vec di = h.comult().col(i);
    const Mat ldi = aa.left_mult_matrix(di);
    for (int j = 0; j < n; ++j) {
      const Vec lhs = h.comultiply(a.left_matrices()[i].col(j));
      const Vec rhs = sparse_product(ldi, Vec(h.comult().col(j)));
      if (!matrices_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

bool counit_multiplicative(const HopfAlgebra& h) {
  const int n = h.rank();
  const FiniteAlgebra& a = h.algebra();
  if (!(h.counit_of(a.unit()) == FieldElem(1))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(h.counit_of(a.left_matrices()[i].col(j)) == h.counit()(i) * h.counit()(j))) return false;
  return true;
}

}  // namespace

HopfReport validate_hopf(const HopfAlgebra& h) {
  HopfReport rep;
  for (const auto& f : h.algebra().validate()) {
    if (f != "integrality") rep.failures.push_back(f);
  }
  if (!coassociative(h)) rep.failures.push_back("coassociativity");
  if (!counital(h)) rep.failures.push_back("counit");
  if (!antipode_law(h)) rep.failures.push_back("antipode");
  const int n = h.rank();
  if (!matrices_equal(sparse_product(h.antipode(), h.antipode()), Mat(Mat::Identity(n, n))))
    rep.failures.push_back("antipode_involution");
  if (!comult_multiplicative(h)) rep.failures.push_back("comult_multiplicative");
  if (!counit_multiplicative(h)) rep.failures.push_back("counit_multiplicative");
  const RingSpec& r = h.ring();
  bool integral = matrix_in_ring(h.algebra().unit(), r) && matrix_in_ring(h.comult(), r) &&
                  matrix_in_ring(h.counit(), r) && matrix_in_ring(h.antipode(), r);
  for (const auto& l : h.algebra().left_matrices()) integral = integral && matrix_in_ring(l, r);
  if (!integral) rep.failures.push_back("integrality");
  return rep;
}

HopfAlgebra dual(const HopfAlgebra& h) {
  const int n = h.rank();
  const FiniteAlgebra& a = h.algebra();
  std::vector<Mat> left(n, Mat::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) left[j](i, k) = h.comult()(j * n + k, i);
  Mat comult = Mat::Zero(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) comult(j * n + k, i) = a.left_matrices()[j](i, k);
  FiniteAlgebra da(a.ring(), std::move(left), h.counit());
  return HopfAlgebra(std::move(da), std::move(comult), a.unit(), h.antipode().transpose());
}

bool hopf_equal(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (!matrices_equal(a.algebra().left_matrices()[i], b.algebra().left_matrices()[i])) return false;
  return matrices_equal(a.algebra().unit(), b.algebra().unit()) && matrices_equal(a.comult(), b.comult()) &&
         matrices_equal(a.counit(), b.counit()) && matrices_equal(a.antipode(), b.antipode());
}

Mat integral_equations(const HopfAlgebra& h, Side side) {
  const int n = h.rank();
  const FiniteAlgebra& a = h.algebra();
  Mat sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    const Vec ei = a.basis_vector(i);
    Mat block = side == Side::Left ? a.left_mult_matrix(ei) : a.right_mult_matrix(ei);
    for (int d = 0; d < n; ++d) block(d, d) -= h.counit()(i);
    sys.middleRows(i * n, n) = block;
  }
  return sys;
}

namespace {

Vec integral_span(const HopfAlgebra& h, Side side) {
  const Mat k = kernel(integral_equations(h, side));
  if (k.cols() != 1)
    throw Error(ErrorKind::KernelRankError,
                "integrals span a space of dimension " + std::to_string(k.cols()) + ", expected 1");
  return k.col(0);
}

}  // namespace

Mat theta_map(const HopfAlgebra& h, const Vec& theta) {
  const int n = h.rank();
  Mat t(n, n);
  for (int k = 0; k < n; ++k) t.col(k) = sparse_product(h.regular_dual_action(k), theta);
  return t;
}

std::optional<Vec> solve_theta_dual(const HopfAlgebra& h, const Vec& theta) {
  const Mat t = theta_map(h, theta);
  auto inv = inverse(t);
  if (!inv) return std::nullopt;
  return Vec(sparse_product(*inv, h.algebra().unit()));
}

IntegralData integrals_with_witness(const HopfAlgebra& h, const Vec& theta) {
  IntegralData d;
  d.span_k = integral_span(h, Side::Left);
  Mat pair(h.rank(), 2);
  pair << d.span_k, theta;
  if (is_zero_matrix(theta) || rank(pair) != 1) throw Error(ErrorKind::NoFreeGenerator, "witness is not a nonzero integral");
  if (!matrix_in_ring(theta, h.ring())) throw Error(ErrorKind::NoFreeGenerator, "witness is not in A");
  auto td = solve_theta_dual(h, theta);
  if (!td || !matrix_in_ring(*td, h.ring()))
    throw Error(ErrorKind::NoFreeGenerator, "no theta_dual in A^D for the witness");
  d.theta = theta;
  d.theta_dual = *td;
  return d;
}

IntegralData integrals(const HopfAlgebra& h, Side side, bool require_generator) {
  IntegralData d;
  d.span_k = integral_span(h, side);
  if (side == Side::Right) return d;
  try {
    Mat gen = saturated_basis(Mat(d.span_k), h.ring());
    const Vec theta = gen.col(0);
    auto td = solve_theta_dual(h, theta);
    if (td && matrix_in_ring(*td, h.ring())) {
      d.theta = theta;
      d.theta_dual = *td;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::LatticeNotFree) throw;
  }
  if (require_generator && !d.theta)
    throw Error(ErrorKind::NoFreeGenerator, "no certified free generator of the integrals");
  return d;
}

bool is_unimodular(const HopfAlgebra& h) {
  const Vec l = integral_span(h, Side::Left);
  const Vec r = integral_span(h, Side::Right);
  return same_column_space(Mat(l), Mat(r));
}

int antipode_on_integrals(const HopfAlgebra& h) {
  const Vec l = integral_span(h, Side::Left);
  const Vec s = sparse_product(h.antipode(), l);
  if (matrices_equal(s, l)) return 1;
  if (matrices_equal(s, Vec(-l))) return -1;
  throw Error(ErrorKind::H1Failure, "antipode does not act by a sign on integrals (not unimodular)");
}

bool is_separable(const FiniteAlgebra& a) { return !determinant(a.trace_gram(FieldElem(1))).is_zero(); }

bool check_H1(const HopfAlgebra& h) {
  try {
    if (!is_unimodular(h)) return false;
    const IntegralData d = integrals(h, Side::Left);
    if (!d.theta) return false;
    return matrices_equal(sparse_product(h.antipode(), *d.theta), *d.theta);
  } catch (const Error&) {
    return false;
  }
}

H2Data check_H2(const HopfAlgebra& h, const FieldElem& sqrt_witness) {
  if (!h.algebra().is_commutative()) throw Error(ErrorKind::NotCommutative, "H2 needs a commutative Hopf algebra");
  if (!is_separable(h.algebra())) throw Error(ErrorKind::NotSeparable, "trace form of A_K is degenerate");
  const IntegralData d = integrals(h, Side::Left, true);
  const FieldElem lambda = h.counit_of(*d.theta);
  if (lambda.is_zero()) throw Error(ErrorKind::NotSeparable, "integral has zero counit");
  if (!is_square_up_to_unit(lambda, sqrt_witness, h.ring()))
    throw Error(ErrorKind::NotASquare, "eps(theta) is not the square of the witness up to a unit");
  H2Data out;
  out.lambda = lambda;
  out.lambda_sqrt = sqrt_witness;
  out.idempotent = *d.theta / lambda;
  out.theta = (sqrt_witness * sqrt_witness) * out.idempotent;
  auto td = solve_theta_dual(h, out.theta);
  if (!td || !matrix_in_ring(*td, h.ring()))
    throw Error(ErrorKind::NoFreeGenerator, "normalised theta has no theta_dual in A^D");
  out.theta_dual = *td;
  return out;
}

bool counit_product_check(const HopfAlgebra& h, const Vec& theta, const Vec& theta_dual) {
  FieldElem eps_d = h.ring().zero();
  for (int i = 0; i < h.rank(); ++i) eps_d += theta_dual(i) * h.algebra().unit()(i);
  return h.counit_of(theta) * eps_d == FieldElem(h.rank());
}

bool counit_product_check(const HopfAlgebra& h) {
  const IntegralData d = integrals(h, Side::Left, true);
  return counit_product_check(h, *d.theta, *d.theta_dual);
}

}  // namespace hopftwist
