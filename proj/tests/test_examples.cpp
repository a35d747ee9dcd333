#include "doctest.h"
#include "test_util.hpp"

using namespace hopftwist;
using namespace testutil;

namespace {

void check_report(const ExampleReport& r) {
  INFO("example " << r.name);
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.ok());
  CHECK_FALSE(r.checks.empty());
}

}  // namespace

TEST_CASE("group tables") {
  for (int n : {1, 2, 5, 6}) {
    const GroupTable t = cyclic_table(n);
    CHECK(validate_group_table(t) == 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(t[a][b] == t[b][a]);
  }
  const GroupTable s3 = symmetric3_table();
  CHECK(validate_group_table(s3) == 0);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && s3[a][b] == s3[b][a];
  CHECK_FALSE(abelian);

  for (int n : {3, 4, 5}) {
    const GroupTable d = dihedral_table(n);
    CHECK(validate_group_table(d) == 0);
    const int sigma = 1, tau = n;
    int s = 0;
    for (int k = 0; k < n; ++k) s = d[s][sigma];
    CHECK(s == 0);
    CHECK(d[tau][tau] == 0);
    // tau sigma tau = sigma^{-1}
    CHECK(d[d[tau][sigma]][tau] == n - 1);
    const std::vector<int> inv = group_inverses(d);
    for (int g = 0; g < 2 * n; ++g) CHECK(d[g][inv[g]] == 0);
  }

  GroupTable bad = cyclic_table(3);
  bad[1][1] = 1;
  try {
    validate_group_table(bad);
    FAIL("non-group accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadGroupTable);
  }
  CHECK_THROWS_AS(validate_group_table({{0, 1}, {1}}), Error);
}

TEST_CASE("change of basis preserves the Hopf structure") {
  const RingSpec r = RingSpec::rational_inverted({2, 3});
  const HopfAlgebra g = build_group_algebra(cyclic_table(3), r);
  auto rg = rng(60);
  const Mat p = random_unimodular(rg, 3);
  const HopfAlgebra h = change_basis(g, p);
  CHECK(validate_hopf(h).ok());
  CHECK(hopf_equal(change_basis(h, *inverse(p)), g));
}

TEST_CASE("Kummer torsors") {
  const RingSpec r = cyclotomic_ring(5, {2, 3});
  const HopfPtr mu5 = share(build_mu_n(5, r));
  const PHS b1 = build_kummer_torsor(mu5, FieldElem(1L));
  const PHS triv = trivial_torsor(mu5);
  CHECK(matrices_equal(b1.comodule().coaction(), triv.comodule().coaction()));
  for (int i = 0; i < 5; ++i)
    CHECK(matrices_equal(b1.algebra().left_matrices()[i], triv.algebra().left_matrices()[i]));
  try {
    build_kummer_torsor(mu5, FieldElem(5L));
    FAIL("y = 5 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
  // x^5 = y
  const PHS b2 = build_kummer_torsor(mu5, FieldElem(2L));
  Vec x = unit_vector(5, 1), p = b2.algebra().unit();
  for (int k = 0; k < 5; ++k) p = b2.algebra().multiply(p, x);
  CHECK(matrices_equal(p, Vec(b2.algebra().unit() * FieldElem(2L))));
}

TEST_CASE("Gauss sums") {
  for (int p : {5, 13}) {
    const RingSpec r = cyclotomic_ring(p, {2, 3});
    CHECK(gauss_sum_sqrt(p, r) * gauss_sum_sqrt(p, r) == FieldElem(static_cast<long>(p)));
  }
}

TEST_CASE("worked examples") {
  for (const auto& name : example_names()) check_report(run_example(name, {}));
  CHECK_THROWS_AS(run_example("no-such-example", {}), Error);
}

TEST_CASE("twist of (V, q) for each y") {
  for (long y : {1L, 2L, 3L, -1L}) {
    const ExampleReport r = run_example("kummer-twist", {{"y", std::to_string(y)}});
    check_report(r);
    const Mat& g = r.matrices.at("twist Gram");
    // oracle: q_y(x^{p-1} (x) e1, x (x) e2) = Tr(x^p) q(e1, e2) / p = y / 2
    const FieldElem half_y(Rational(y) / 2);
    CHECK(g(0, 0).is_zero());
    CHECK(g(1, 1).is_zero());
    CHECK(g(0, 1) == half_y);
    CHECK(g(1, 0) == half_y);
  }
}

TEST_CASE("dihedral variants") {
  const RingSpec r = dihedral_ring();
  {
    const DihedralParams p = default_dihedral_params(r);
    check_report(verify_dihedral(r, p));
    const ExampleReport t = verify_dihedral_twist(r, p);
    check_report(t);
    // a = alpha tau(alpha) = -zeta_3 for alpha = delta
    const FieldElem z = r.generator();
    const Mat& g = t.matrices.at("twist Gram on (eps1, eps2)");
    CHECK(g(0, 0) == FieldElem(-2L) * z);
    CHECK(g(1, 1) == FieldElem(2L) * z * z);
    CHECK(g(0, 1).is_zero());
  }
  {
    DihedralParams p = default_dihedral_params(r);
    p.delta_sq = FieldElem(-1L);
    const ExampleReport t = verify_dihedral_twist(r, p);
    check_report(t);
    CHECK(matrices_equal(t.matrices.at("twist Gram on (eps1, eps2)"), diag({FieldElem(2L), FieldElem(2L)})));
  }
  {
    // delta^2 = 1 splits E but still gives a torsor; every check holds
    DihedralParams p = default_dihedral_params(r);
    p.delta_sq = FieldElem(1L);
    p.alpha0 = FieldElem(2L);
    p.alpha1 = FieldElem(1L);
    check_report(verify_dihedral(r, p));
  }
  {
    const RingSpec r15 = cyclotomic_ring(15, {2, 3, 5});
    DihedralParams p;
    p.n = 5;
    p.chi = 1;
    p.zeta = r15.generator().pow(3);
    p.delta_sq = r15.generator();
    p.alpha0 = FieldElem(0L);
    p.alpha1 = FieldElem(1L);
    const ExampleReport t = verify_dihedral_twist(r15, p);
    check_report(t);
    const FieldElem z = r15.generator();
    CHECK(matrices_equal(t.matrices.at("twist Gram on (eps1, eps2)"),
                         diag({FieldElem(-2L) * z, FieldElem(2L) * z * z})));
  }
  {
    // n = 4 over Q(i): only the Hopf structure is checked
    const RingSpec r4 = cyclotomic_ring(4, {2, 3, 5});
    const GroupTable d4 = dihedral_table(4);
    CHECK(validate_hopf(build_group_algebra(d4, r4)).ok());
    CHECK(validate_hopf(build_constant(d4, r4)).ok());
  }
  DihedralParams bad = default_dihedral_params(r);
  bad.chi = 0;
  CHECK_THROWS_AS(build_dihedral(r, bad), Error);
}
