#include "hopftwist/phs.hpp"

#include <algorithm>

#include "hopftwist/lattice.hpp"

namespace hopftwist {

PHS::PHS(FiniteAlgebra alg, Comodule coaction) : alg_(std::move(alg)), coaction_(std::move(coaction)) {
  if (coaction_.rank() != alg_.rank())
    throw Error(ErrorKind::DimensionMismatch, "coaction rank differs from the algebra rank");
  if (!alg_.ring().same(coaction_.ring())) throw Error(ErrorKind::FieldMismatch, "algebra and Hopf algebra rings differ");
}

PHS trivial_torsor(const HopfPtr& a) { return PHS(a->algebra(), regular_comodule(a)); }

bool PHSReport::has(const std::string& name) const {
  return std::find(failures.begin(), failures.end(), name) != failures.end();
}

Mat phi_matrix(const PHS& b) {
  const int n = b.rank();
  const int na = b.hopf().rank();
  const Mat& alpha = b.comodule().coaction();
  Mat phi = Mat::Zero(n * na, n * n);
  for (int i = 0; i < n; ++i) {
    const Mat li = b.algebra().left_mult_matrix(b.algebra().basis_vector(i));
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int k = 0; k < na; ++k) {
          const FieldElem& x = alpha(a * na + k, j);
          if (x.is_zero()) continue;
          for (int c = 0; c < n; ++c)
            if (!li(c, a).is_zero()) phi(c * na + k, i * n + j) += x * li(c, a);
        }
  }
  return phi;
}

PHSReport is_phs(const PHS& b) {
  PHSReport rep;
  const FiniteAlgebra& alg = b.algebra();
  const HopfAlgebra& h = b.hopf();
  const int n = b.rank();
  const Mat& alpha = b.comodule().coaction();
  if (!alg.is_commutative()) rep.failures.push_back("commutative");
  if (!b.comodule().validate().empty()) rep.failures.push_back("comodule");

  const FiniteAlgebra ba = tensor_algebra(alg, h.algebra());
  bool mult = matrices_equal(Vec(alpha * alg.unit()), ba.unit());
  for (int i = 0; i < n && mult; ++i)
    for (int j = 0; j < n && mult; ++j) {
      const Vec lhs = alpha * alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
      const Vec rhs = ba.multiply(Vec(alpha.col(i)), Vec(alpha.col(j)));
      mult = matrices_equal(lhs, rhs);
    }
  if (!mult) rep.failures.push_back("algebra_map");

  const Mat fixed = fixed_points(b.comodule());
  if (fixed.cols() != 1 || !lattice_equal(fixed, Mat(alg.unit()), b.ring())) rep.failures.push_back("fixed_points");

  const Mat phi = phi_matrix(b);
  if (phi.rows() != phi.cols()) {
    rep.phi_det = FieldElem(0L);
    rep.failures.push_back("phi");
  } else {
    rep.phi_det = determinant(phi);
    if (rep.phi_det.is_zero() || !b.ring().is_unit(rep.phi_det)) rep.failures.push_back("phi");
  }
  return rep;
}

PrincipalIdeal codifferent(const PHS& b) {
  const HopfAlgebra& a = b.hopf();
  if (!a.algebra().is_commutative()) throw Error(ErrorKind::NotCommutative, "codifferent needs a commutative A");
  if (!is_separable(a.algebra())) throw Error(ErrorKind::NotSeparable, "A_K is not separable");
  const IntegralData d = integrals(a, Side::Left, true);
  const FieldElem lambda = a.counit_of(*d.theta);
  const Mat g = b.algebra().trace_gram(FieldElem(1L));
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorKind::DualLatticeMismatch, "trace form of B is degenerate");
  const int n = b.rank();
  const Mat scaled = Mat::Identity(n, n) * lambda.inverse();
  if (!lattice_equal(*ginv, scaled, b.ring()))
    throw Error(ErrorKind::DualLatticeMismatch, "dual lattice of the trace form differs from Lambda^{-1} B");
  return PrincipalIdeal(lambda.inverse(), b.ring());
}

SymBundle trace_bundle(const PHS& b, const FieldElem& lambda_sqrt) {
  SymBundle out(b.comodule(), b.algebra().trace_gram(lambda_sqrt.inverse()));
  if (!out.is_nondegenerate()) throw Error(ErrorKind::H2Failure, "trace form on lambda^{-1/2} B is not perfect");
  return out;
}

SymBundle unit_form(const HopfPtr& a, const Vec& theta) {
  if (!a->algebra().is_commutative()) throw Error(ErrorKind::NotCommutative, "unit form needs a commutative A");
  if (!check_H1(*a)) throw Error(ErrorKind::H1Failure, "A does not satisfy H1");
  const HopfAlgebra d = dual(*a);
  const int n = a->rank();
  Mat k(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec su = d.antipode().col(i);
    for (int j = 0; j < n; ++j) k(i, j) = d.algebra().multiply(su, d.algebra().basis_vector(j)).dot(theta);
  }
  return SymBundle(dual_regular_comodule(a), k);
}

SymBundle unit_form(const HopfPtr& a) {
  const IntegralData d = integrals(*a, Side::Left, true);
  return unit_form(a, *d.theta);
}

Mat TwistResult::gram_on(const Mat& fixed_vectors) const {
  return fixed_form_on(SymBundle(module, module_gram), theta_dual, fixed_vectors);
}

TwistResult twist(const SymBundle& m, const PHS& b, const H2Data& h2) {
  if (!m.module()) throw Error(ErrorKind::NotEquivariant, "bundle has no comodule structure");
  if (!hopf_equal(m.module()->hopf(), b.hopf())) throw Error(ErrorKind::DimensionMismatch, "bundle and torsor use different Hopf algebras");
  const SymBundle tb = trace_bundle(b, h2.lambda_sqrt);
  Comodule big = tensor_diagonal(b.comodule(), *m.module());
  Mat big_gram = kron(tb.gram(), m.gram());
  const SymBundle big_bundle(big, big_gram);
  const auto gens = tensor_free_basis(b.comodule(), *m.module());
  const FixedForm ff = gens && is_free_basis(big, *gens) ? fixed_form(big_bundle, h2.theta_dual, *gens)
                                                         : fixed_form(big_bundle, h2.theta_dual);
  return TwistResult{ff.basis,      ff.gram,        ff.preimages,    ff.well_defined,     h2.theta,
                     h2.theta_dual, h2.lambda_sqrt, std::move(big), std::move(big_gram)};
}

TwistResult twist(const SymBundle& m, const PHS& b, const FieldElem& lambda_sqrt) {
  return twist(m, b, check_H2(b.hopf(), lambda_sqrt));
}

namespace {

Mat coordinates_in(const Mat& basis, const Mat& vectors) {
  auto c = solve(basis, vectors);
  if (!c) throw Error(ErrorKind::H1Failure, "image is not in the fixed lattice");
  return *c;
}

}  // namespace

Mat trivial_twist_isometry(const SymBundle& m, const TwistResult& t) {
  const int r = m.rank();
  const Mat act = t.module.action(t.theta_dual);
  Mat images(t.module.rank(), r);
  for (int j = 0; j < r; ++j) {
    Vec ej = Vec::Zero(r);
    ej(j) = FieldElem(1L);
    images.col(j) = act * kron(t.theta, ej);
  }
  return coordinates_in(t.basis, images);
}

Mat trivial_twist_inverse(const TwistResult& t) {
  const int na = static_cast<int>(t.theta.size());
  const int r = t.module.rank() / na;
  const Vec& eps = t.module.hopf().counit();
  Mat mu = Mat::Zero(r, na * r);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < r; ++j) mu(j, i * r + j) = eps(i);
  return mu;
}

Mat unit_form_twist_isometry(const PHS& b, const TwistResult& t) {
  const int n = b.rank();
  const Vec& one_dual = b.hopf().counit();
  const Mat act = t.module.action(t.theta_dual);
  Mat images(t.module.rank(), n);
  for (int i = 0; i < n; ++i) images.col(i) = act * kron(b.algebra().basis_vector(i), one_dual);
  return coordinates_in(t.basis, images);
}

bool trace_is_integral_action(const PHS& b, const H2Data& h2) {
  const Vec t = (h2.lambda_sqrt * h2.lambda_sqrt) * h2.theta_dual;
  const Mat act = b.comodule().action(t);
  const int n = b.rank();
  Mat expected(n, n);
  for (int i = 0; i < n; ++i)
    expected.col(i) = b.algebra().regular_trace(b.algebra().basis_vector(i)) * b.algebra().unit();
  return matrices_equal(act, expected);
}

bool scalar_extension_integrals_check(const PHS& b) {
  const HopfAlgebra& a = b.hopf();
  const int n = b.rank();
  const int na = a.rank();
  const IntegralData d = integrals(a, Side::Left, true);
  const FiniteAlgebra c = tensor_algebra(b.algebra(), a.algebra());
  const int dim = n * na;
  Mat eqs(dim * na, dim);
  for (int k = 0; k < na; ++k) {
    Mat l = c.left_mult_matrix(kron(b.algebra().unit(), a.algebra().basis_vector(k)));
    for (int i = 0; i < dim; ++i) l(i, i) -= a.counit()(k);
    eqs.middleRows(k * dim, dim) = l;
  }
  const Mat ker = kernel(eqs);
  if (ker.cols() != n) return false;
  const Mat lhs = saturated_basis(ker, b.ring());
  const Mat rhs = kron(Mat(Mat::Identity(n, n)), Mat(*d.theta));
  return lattice_equal(lhs, rhs, b.ring());
}

}  // namespace hopftwist
