#include "doctest.h"
#include "test_util.hpp"

using namespace hopftwist;
using namespace testutil;

TEST_CASE("multiplication examples") {
  const RingSpec q = RingSpec::rational_local({});
  const HopfAlgebra c2 = build_group_algebra(cyclic_table(2), q);
  const FiniteAlgebra& a = c2.algebra();
  CHECK(matrices_equal(a.multiply(a.basis_vector(1), a.basis_vector(1)), a.basis_vector(0)));

  const FiniteAlgebra m = build_constant(cyclic_table(2), q).algebra();
  CHECK(is_zero_matrix(m.multiply(m.basis_vector(0), m.basis_vector(1))));
  CHECK(matrices_equal(m.multiply(m.basis_vector(1), m.basis_vector(1)), m.basis_vector(1)));

  const FiniteAlgebra mu = build_mu_n(5, q).algebra();
  CHECK(matrices_equal(mu.multiply(mu.basis_vector(3), mu.basis_vector(4)), mu.basis_vector(2)));
}

TEST_CASE("left multiplication matrices") {
  const RingSpec q = RingSpec::rational_local({});
  const FiniteAlgebra a = build_group_algebra(cyclic_table(2), q).algebra();
  CHECK(matrices_equal(a.left_mult_matrix(a.unit()), Mat(Mat::Identity(2, 2))));
  CHECK(matrices_equal(a.left_mult_matrix(a.basis_vector(1)),
                       mat2(FieldElem(0L), FieldElem(1L), FieldElem(1L), FieldElem(0L))));

  // e_phi for the trivial and sign characters of C2; check projector and trace by brute force
  const RingSpec z2 = RingSpec::rational_inverted({2});
  const FiniteAlgebra b = build_group_algebra(cyclic_table(2), z2).algebra();
  const Vec e_plus = (b.basis_vector(0) + b.basis_vector(1)) * FieldElem(Rational(1, 2));
  const Vec e_minus = (b.basis_vector(0) - b.basis_vector(1)) * FieldElem(Rational(1, 2));
  const Mat l = b.left_mult_matrix(e_plus);
  CHECK(matrices_equal(Mat(l * l), l));
  CHECK(b.regular_trace(e_plus) == FieldElem(1L));
  CHECK(is_zero_matrix(b.multiply(e_plus, e_minus)));
  for (int j = 0; j < 2; ++j)
    CHECK(matrices_equal(Vec(l.col(j)), b.multiply(e_plus, b.basis_vector(j))));
}

TEST_CASE("regular trace") {
  const RingSpec r = dihedral_ring();
  const FiniteAlgebra kd = build_group_algebra(dihedral_table(3), r).algebra();
  CHECK(kd.regular_trace(kd.unit()) == FieldElem(6L));
  for (int g = 1; g < 6; ++g) CHECK(kd.regular_trace(kd.basis_vector(g)).is_zero());

  // oracle: Tr(1 + t) = tr(I_5) + tr(cyclic shift) computed on plain integers
  long shift_trace = 0;
  for (int i = 0; i < 5; ++i) shift_trace += ((i + 1) % 5 == i) ? 1 : 0;
  const long expected = 5 + shift_trace;
  const FiniteAlgebra mu = build_mu_n(5, RingSpec::rational_local({})).algebra();
  CHECK(mu.regular_trace(mu.unit() + mu.basis_vector(1)) == FieldElem(expected));
}

TEST_CASE("trace Gram") {
  const RingSpec q = RingSpec::rational_local({});
  CHECK(matrices_equal(build_constant(cyclic_table(2), q).algebra().trace_gram(FieldElem(1L)), Mat(Mat::Identity(2, 2))));
  CHECK(matrices_equal(build_group_algebra(cyclic_table(2), q).algebra().trace_gram(FieldElem(1L)),
                       diag({FieldElem(2L), FieldElem(2L)})));

  // B_y with s = 1: p at (0, 0), p y at k + l = p
  const RingSpec r = cyclotomic_ring(5, {2, 3});
  const PHS b = build_kummer_torsor(share(build_mu_n(5, r)), FieldElem(2L));
  const Mat g = b.algebra().trace_gram(FieldElem(1L));
  for (int k = 0; k < 5; ++k)
    for (int l = 0; l < 5; ++l) {
      FieldElem e(0L);
      if (k == 0 && l == 0) e = FieldElem(5L);
      if (k + l == 5) e = FieldElem(10L);
      CHECK(g(k, l) == e);
    }
}

TEST_CASE("algebra invariants on random elements") {
  auto g = rng(20);
  const RingSpec r = dihedral_ring();
  const DihedralSuite ds = build_dihedral(r, default_dihedral_params(r));
  for (const FiniteAlgebra* a : {&ds.h->algebra(), &ds.a->algebra(), &ds.b.algebra()}) {
    CHECK(a->validate().empty());
    for (int t = 0; t < 5; ++t) {
      Vec x(a->rank()), y(a->rank()), z(a->rank());
      for (int i = 0; i < a->rank(); ++i) {
        x(i) = random_element(g, r, 2, 1);
        y(i) = random_element(g, r, 2, 1);
        z(i) = random_element(g, r, 2, 1);
      }
      CHECK(matrices_equal(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z))));
      CHECK(a->regular_trace(a->multiply(x, y)) == a->regular_trace(a->multiply(y, x)));
    }
  }
}

TEST_CASE("validate reports broken structure constants") {
  const RingSpec q = RingSpec::rational_local({});
  std::vector<Mat> left = build_mu_n(3, q).algebra().left_matrices();
  left[1](0, 1) = FieldElem(1L);  // t * t gains a constant term
  const FiniteAlgebra bad(q, left, build_mu_n(3, q).algebra().unit());
  const auto f = bad.validate();
  CHECK(std::find(f.begin(), f.end(), "associativity") != f.end());

  const RingSpec z2 = RingSpec::rational_inverted({2});
  std::vector<Mat> frac = build_mu_n(3, z2).algebra().left_matrices();
  frac[1] *= FieldElem(Rational(1, 3));
  const auto g = FiniteAlgebra(z2, frac, build_mu_n(3, z2).algebra().unit()).validate();
  CHECK(std::find(g.begin(), g.end(), "integrality") != g.end());
}

TEST_CASE("tensor algebra") {
  const RingSpec q = RingSpec::rational_local({});
  const FiniteAlgebra a = build_mu_n(2, q).algebra();
  const FiniteAlgebra b = build_mu_n(3, q).algebra();
  const FiniteAlgebra t = tensor_algebra(a, b);
  CHECK(t.rank() == 6);
  CHECK(t.validate().empty());
  // (t_a (x) t_b)^2 = 1 (x) t_b^2 at index 0 * 3 + 2
  const Vec x = kron(a.basis_vector(1), b.basis_vector(1));
  CHECK(matrices_equal(t.multiply(x, x), t.basis_vector(2)));
}
