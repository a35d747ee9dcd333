#include "doctest.h"
#include "hopftwist/rational_forms.hpp"
#include "test_util.hpp"

using namespace hopftwist;
using namespace testutil;

namespace {

QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

QMat qdiag(std::initializer_list<Rational> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  QMat m = QMat::Zero(n, n);
  int i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

// Small integer vectors (x, y) with a x^2 + b y^2 = t.
bool represents(long a, long b, long t, long bound = 12) {
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (a * x * x + b * y * y == t) return true;
  return false;
}

}  // namespace

TEST_CASE("kernel, solve, inverse, determinant") {
  auto g = rng(10);
  const RingSpec r = cyclotomic_ring(5, {2, 3});
  for (int t = 0; t < 10; ++t) {
    Mat a(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = random_element(g, r, 3, 2);
    const Mat k = kernel(a);
    CHECK(k.cols() == 4 - rank(a));
    CHECK(is_zero_matrix(Mat(a * k)));
    Mat sq = a.leftCols(3);
    const FieldElem d = determinant(sq);
    auto inv = inverse(sq);
    CHECK(inv.has_value() == !d.is_zero());
    if (inv) {
      CHECK(matrices_equal(Mat(sq * *inv), Mat(Mat::Identity(3, 3))));
      CHECK(determinant(*inv) * d == FieldElem(1L));
      const Vec b = a.col(3);
      auto x = solve(sq, Mat(b));
      REQUIRE(x.has_value());
      CHECK(matrices_equal(Mat(sq * *x), Mat(b)));
    }
  }
  // determinant of a permutation matrix
  Mat p = Mat::Zero(3, 3);
  p(0, 1) = p(1, 2) = p(2, 0) = FieldElem(1L);
  CHECK(determinant(p) == FieldElem(1L));
  p.col(0).swap(p.col(1));
  CHECK(determinant(p) == FieldElem(-1L));
}

TEST_CASE("kron follows the i * rank + j convention") {
  const Mat a = mat2(FieldElem(1L), FieldElem(2L), FieldElem(3L), FieldElem(4L));
  const Mat b = mat2(FieldElem(0L), FieldElem(1L), FieldElem(1L), FieldElem(0L));
  const Mat k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k1 = 0; k1 < 2; ++k1)
        for (int l = 0; l < 2; ++l) CHECK(k(i * 2 + k1, j * 2 + l) == a(i, j) * b(k1, l));
}

TEST_CASE("lattices over localized rings") {
  const RingSpec z2 = RingSpec::rational_inverted({2});
  Mat a(2, 1), b(2, 1), c(2, 1);
  a << FieldElem(1L), FieldElem(1L);
  b << FieldElem(4L), FieldElem(4L);    // 4 is a unit
  c << FieldElem(3L), FieldElem(3L);    // 3 is not
  CHECK(lattice_equal(a, b, z2));
  CHECK_FALSE(lattice_equal(a, c, z2));
  CHECK(lattice_contains(a, c, z2));
  CHECK_FALSE(lattice_contains(c, a, z2));
  CHECK(is_saturated(a, z2));
  CHECK_FALSE(is_saturated(c, z2));
  CHECK(lattice_equal(saturated_basis(c, z2), a, z2));
  CHECK(has_unit_determinant(mat2(FieldElem(2L), FieldElem(0L), FieldElem(0L), FieldElem(Rational(1, 8))), z2));
  CHECK_FALSE(has_unit_determinant(mat2(FieldElem(3L), FieldElem(0L), FieldElem(0L), FieldElem(1L)), z2));

  auto g = rng(11);
  const RingSpec r = cyclotomic_ring(5, {2, 3});
  Mat gens(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) gens(i, j) = random_element(g, r, 3, 1);
  const Mat u = random_unimodular(g, 2);
  CHECK(lattice_equal(gens, Mat(gens * u), r));
  Mat scaled = gens;
  scaled.col(0) *= r.constants().at("sqrt5");
  CHECK_FALSE(lattice_equal(gens, scaled, r));
  CHECK(lattice_contains(gens, scaled, r));
}

TEST_CASE("diagonalization") {
  auto g = rng(12);
  for (int t = 0; t < 20; ++t) {
    QMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = small_rational(g, 4, 2);
    const Diagonalization d = diagonalize(m);
    const QMat dd = d.change.transpose() * m * d.change;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(dd(i, j) == (i == j ? d.diagonal[i] : Rational(0)));
  }
  // zero leading diagonal needs the e_i + e_j repair
  const Diagonalization h = diagonalize(qmat({{0, 1}, {1, 0}}));
  CHECK(h.diagonal[0] * h.diagonal[1] == Rational(-1));
}

TEST_CASE("square classes and factorization") {
  CHECK(squarefree_part(Rational(12)) == 3);
  CHECK(squarefree_part(Rational(-8, 9)) == -2);
  CHECK(squarefree_part(Rational(1, 5)) == 5);
  CHECK_THROWS_AS(squarefree_part(Rational(0)), Error);
  CHECK(prime_factors(Integer(360)) == std::vector<Integer>{2, 3, 5});
  const Integer big = Integer(1000003) * Integer(999983);
  CHECK(prime_factors(big) == std::vector<Integer>{999983, 1000003});
}

TEST_CASE("Hilbert symbols") {
  // Real place
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), 0) == -1);
  CHECK(hilbert_symbol(Rational(-1), Rational(2), 0) == 1);
  // (-1, -1)_2 = -1, (2, 3)_3 = -1, (2, 5)_5 = -1, (2, 7)_7 = 1
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), 2) == -1);
  CHECK(hilbert_symbol(Rational(2), Rational(3), 3) == -1);
  CHECK(hilbert_symbol(Rational(2), Rational(5), 5) == -1);
  CHECK(hilbert_symbol(Rational(2), Rational(7), 7) == 1);

  auto g = rng(13);
  const std::vector<Integer> places = {0, 2, 3, 5, 7, 11};
  for (int t = 0; t < 30; ++t) {
    Rational a = small_rational(g, 12, 5), b = small_rational(g, 12, 5), c = small_rational(g, 12, 5);
    if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0) continue;
    for (const auto& p : places) {
      CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
      CHECK(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p));
      CHECK(hilbert_symbol(a, -a, p) == 1);
      if (a != 1) CHECK(hilbert_symbol(a, 1 - a, p) == 1);
      CHECK(hilbert_symbol(a, b * b, p) == 1);
    }
  }
}

TEST_CASE("rational invariants and isometry over Q") {
  CHECK(decide_isometry_Q(qdiag({1, 1}), qdiag({2, 2})));
  CHECK_FALSE(decide_isometry_Q(qdiag({1, 1}), qdiag({1, -1})));
  CHECK_FALSE(decide_isometry_Q(qdiag({1, -2}), qdiag({1, 2})));
  // oracle: -2 is represented by x^2 - 2y^2 and never by x^2 + 2y^2
  CHECK(represents(1, -2, -2));
  CHECK_FALSE(represents(1, 2, -2));
  // same rank, determinant and signature, different Hasse invariant at 3
  CHECK_FALSE(decide_isometry_Q(qdiag({1, 1}), qdiag({3, 3})));
  CHECK(decide_isometry_Q(qmat({{0, 1}, {1, 0}}), qdiag({1, -1})));
  CHECK_THROWS_AS(rational_invariants(qdiag({1, 0})), Error);

  const FormInvariants inv = rational_invariants(qdiag({1, -2, 6}));
  CHECK(inv.rank == 3);
  CHECK(inv.det_class == -3);
  CHECK(inv.positive == 2);
  CHECK(inv.negative == 1);
  CHECK(inv.product_formula());

  auto g = rng(14);
  for (int t = 0; t < 25; ++t) {
    QMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = small_rational(g, 6, 3);
    Diagonalization d = diagonalize(m);
    if (std::any_of(d.diagonal.begin(), d.diagonal.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
    CHECK(rational_invariants(m).product_formula());
    QMat p(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p(i, j) = small_rational(g, 3, 2);
    if (sgn(determinant(p)) == 0) continue;
    CHECK(decide_isometry_Q(m, QMat(p.transpose() * m * p)));
  }
}
