// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../test_util.hpp"
#include "hopftwist/cli.hpp"
#include "hopftwist/rational_forms.hpp"

using namespace hopftwist;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

// Collects named sub-checks of one criterion.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty() && count_ > 0; }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const RingSpec& z6() {
  static const RingSpec r = RingSpec::rational_inverted({2, 3});
  return r;
}

const RingSpec& rationals() {
  static const RingSpec r = RingSpec::rational_local({});
  return r;
}

const RingSpec& r5() {
  static const RingSpec r = cyclotomic_ring(5, {2, 3});
  return r;
}

FieldElem sqrt5() { return r5().constants().at("sqrt5"); }

int identity_index(const GroupTable& t) {
  for (int e = 0; e < static_cast<int>(t.size()); ++e) {
    bool ok = true;
    for (int g = 0; g < static_cast<int>(t.size()); ++g) ok = ok && t[e][g] == g;
    if (ok) return e;
  }
  return -1;
}

Vec all_ones(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = FieldElem(1L);
  return v;
}

// eps(theta) eps_D(theta_dual), computed from the counit and the unit of A.
FieldElem counit_product(const HopfAlgebra& h, const Vec& theta, const Vec& theta_dual) {
  FieldElem a(0L), b(0L);
  for (int i = 0; i < h.rank(); ++i) {
    a += h.counit()(i) * theta(i);
    b += theta_dual(i) * h.algebra().unit()(i);
  }
  return a * b;
}

const std::vector<std::pair<std::string, GroupTable>>& small_groups() {
  static const std::vector<std::pair<std::string, GroupTable>> g = {
      {"C2", cyclic_table(2)}, {"C5", cyclic_table(5)}, {"S3", symmetric3_table()}};
  return g;
}

// ---------------------------------------------------------------------------

void axioms(Ledger& l) {
  const auto t0 = Clock::now();
  for (const RingSpec* r : {&rationals(), &z6()}) {
    for (const auto& [name, t] : small_groups()) {
      l.expect(validate_hopf(build_constant(t, *r)).ok(), "Map(" + name + ") axioms");
      l.expect(validate_hopf(build_group_algebra(t, *r)).ok(), "R[" + name + "] axioms");
    }
    for (int n : {2, 3, 5}) l.expect(validate_hopf(build_mu_n(n, *r)).ok(), "mu_" + std::to_string(n) + " axioms");
  }
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  l.expect(validate_hopf(*ds.h).ok(), "dihedral H axioms");
  l.expect(validate_hopf(*ds.a).ok(), "dihedral A axioms");

  const HopfAlgebra mu5 = build_mu_n(5, z6());
  const int n = 5;
  {
    const HopfAlgebra bad(mu5.algebra(), mu5.comult(), mu5.counit(), Mat::Identity(n, n));
    l.expect(validate_hopf(bad).has("antipode"), "S(t) = t reports antipode");
  }
  {
    Vec eps = Vec::Zero(n);
    eps(1) = FieldElem(1L);
    const HopfAlgebra bad(mu5.algebra(), mu5.comult(), eps, mu5.antipode());
    l.expect(validate_hopf(bad).has("counit"), "eps(t) = 1, eps(1) = 0 reports counit");
  }
  {
    Mat c = mu5.comult();
    c(1 * n + 0, 1) = FieldElem(1L);
    const HopfAlgebra bad(mu5.algebra(), c, mu5.counit(), mu5.antipode());
    l.expect(validate_hopf(bad).has("coassociativity"), "Delta(t) = t (x) t + t (x) 1 reports coassociativity");
  }
  {
    const HopfAlgebra ga = build_group_algebra(symmetric3_table(), z6());
    Mat s = ga.antipode();
    s.col(1).swap(s.col(2));
    const HopfAlgebra bad(ga.algebra(), ga.comult(), ga.counit(), s);
    l.expect(validate_hopf(bad).has("antipode"), "R[S3] with permuted antipode reports antipode");
  }
  const double secs = seconds_since(t0);
  l.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s < 5 s");
}

void integral_lattices(Ledger& l) {
  const RingSpec& r = z6();
  auto check_counit = [&](const std::string& tag, const HopfAlgebra& h, const IntegralData& d) {
    l.expect(d.theta && d.theta_dual, tag + ": generator and theta_dual found");
    if (!d.theta || !d.theta_dual) return;
    l.expect(counit_product(h, *d.theta, *d.theta_dual) == FieldElem(static_cast<long>(h.rank())),
             tag + ": eps(theta) eps_D(theta_dual) = rank");
  };
  for (const auto& [name, t] : small_groups()) {
    const int n = static_cast<int>(t.size());
    const HopfAlgebra ga = build_group_algebra(t, r);
    const IntegralData dg = integrals(ga, Side::Left, true);
    l.expect(lattice_equal(col(*dg.theta), col(all_ones(n)), r), "I(R[" + name + "]) = R sum(g)");
    check_counit("R[" + name + "]", ga, dg);
    const HopfAlgebra mp = build_constant(t, r);
    const IntegralData dm = integrals(mp, Side::Left, true);
    l.expect(lattice_equal(col(*dm.theta), col(unit_vector(n, identity_index(t))), r),
             "I(Map(" + name + ")) = R delta_1");
    check_counit("Map(" + name + ")", mp, dm);
  }
  for (int p : {2, 3, 5}) {
    const HopfAlgebra mu = build_mu_n(p, r);
    const IntegralData d = integrals(mu, Side::Left, true);
    l.expect(lattice_equal(col(*d.theta), col(all_ones(p)), r), "I(mu_" + std::to_string(p) + ") = R(1 + ... + t^(p-1))");
    check_counit("mu_" + std::to_string(p), mu, d);
  }
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  const int n = ds.params.n;
  {
    const IntegralData d = integrals(*ds.h, Side::Left, true);
    // 2 e_D = e_phi0 + e_phi0 tau in the h_basis
    Vec two_e_d = Vec::Zero(2 * n);
    two_e_d(0) = FieldElem(1L);
    two_e_d(n) = FieldElem(1L);
    l.expect(lattice_equal(col(*d.theta), col(two_e_d), dr), "I(H) = 2R e_D");
    // in group coordinates 2 e_D = (1 + tau) sum(sigma^k) / n
    const Vec in_group = ds.h_basis * *d.theta;
    Vec expected = Vec::Zero(2 * n);
    for (int g = 0; g < 2 * n; ++g) expected(g) = FieldElem(Rational(1, n));
    l.expect(lattice_equal(col(in_group), col(expected), dr), "I(H) in R[D] coordinates is R (1/n) sum(g)");
    check_counit("H", *ds.h, d);
  }
  {
    const IntegralData d = integrals(*ds.a, Side::Left, true);
    Vec n_l0 = Vec::Zero(2 * n);
    for (int j = 0; j < n; ++j) n_l0(j) = FieldElem(1L);
    l.expect(lattice_equal(col(*d.theta), col(n_l0), dr), "I(A) = R n l0");
    check_counit("A", *ds.a, d);
  }
}

void theta_pairing(Ledger& l) {
  std::vector<std::pair<std::string, HopfPtr>> cases;
  for (const auto& [name, t] : small_groups()) {
    cases.emplace_back("R[" + name + "]", share(build_group_algebra(t, z6())));
    cases.emplace_back("Map(" + name + ")", share(build_constant(t, z6())));
  }
  for (int p : {2, 3, 5}) cases.emplace_back("mu_" + std::to_string(p), share(build_mu_n(p, z6())));
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  cases.emplace_back("H", ds.h);
  cases.emplace_back("A", ds.a);

  for (const auto& [tag, h] : cases) {
    l.expect(check_H1(*h), tag + ": H1");
    const IntegralData d = integrals(*h, Side::Left, true);
    const HopfAlgebra hd = dual(*h);
    const Vec& th = *d.theta;
    const Vec& td = *d.theta_dual;
    l.expect(matrices_equal(Vec(h->regular_dual_action(td) * th), h->algebra().unit()), tag + ": theta_dual theta = 1_A");
    l.expect(matrices_equal(Vec(hd.regular_dual_action(th) * td), hd.algebra().unit()),
             tag + ": theta theta_dual = 1_(A^D)");
    const Mat tm = theta_map(*h, th);
    l.expect(has_unit_determinant(tm, h->ring()), tag + ": u -> u theta has unit determinant");
    // u -> u theta sends the unit of A^D (the counit of A) to theta
    l.expect(matrices_equal(Vec(tm * h->counit()), th), tag + ": eps theta = theta");
  }
}

struct RandomSet {
  std::vector<HopfPtr> hopf;
  std::vector<std::pair<int, Comodule>> modules;  // (index into hopf, module)
};

const RandomSet& random_set() {
  static const RandomSet s = [] {
    RandomSet s;
    s.hopf = {share(build_mu_n(5, z6())), share(build_constant(cyclic_table(5), z6()))};
    auto g = rng(1201);
    for (int h = 0; h < 2; ++h)
      for (int r : {1, 2, 3, 1, 2, 3}) s.modules.emplace_back(h, random_free_module(g, s.hopf[h], r));
    return s;
  }();
  return s;
}

void fixed_point_machinery(Ledger& l) {
  const RandomSet& s = random_set();
  l.expect(s.modules.size() >= 10, "at least 10 random free modules");
  for (std::size_t i = 0; i < s.modules.size(); ++i) {
    const auto& [h, m] = s.modules[i];
    const std::string tag = "module " + std::to_string(i) + " (rank " + std::to_string(m.rank() / 5) + ")";
    const IntegralData d = integrals(*s.hopf[h], Side::Left, true);
    const Mat kernel_basis = fixed_points(m);
    const Mat via_theta = fixed_points_via_theta(m, *d.theta_dual);
    l.expect(lattice_equal(kernel_basis, via_theta, z6()), tag + ": M^A = theta_dual M");
    // oracle: a free module of rank r has fixed points of rank r
    l.expect(kernel_basis.cols() == m.rank() / 5, tag + ": rank of M^A");
    const CoinvariantReport c = coinvariants(m, *d.theta_dual);
    l.expect(c.ok() && c.quotient_rank == m.rank() / 5, tag + ": coinvariants map isomorphically onto M^A");
  }
}

void hom_identity(Ledger& l) {
  const RandomSet& s = random_set();
  const int per_hopf = 6;
  for (int h = 0; h < 2; ++h)
    for (int k = 0; k < per_hopf; ++k) {
      const Comodule& m = s.modules[h * per_hopf + k].second;
      const Comodule& n = s.modules[h * per_hopf + (k + 1) % per_hopf].second;
      const std::string tag = "pair " + std::to_string(h * per_hopf + k);
      l.expect(hom_fixed_check(m, n), tag + ": Hom_(A^D)(M, N) = Hom_R(M, N)^A");
      // oracle: Hom between free modules of ranks r and s has R-rank r s n
      const long expected = static_cast<long>(m.rank()) * n.rank() / 5;
      l.expect(equivariant_maps(m, n).cols() == expected, tag + ": R-rank of Hom_(A^D)(M, N)");
    }
}

void unit_forms(Ledger& l) {
  const HopfPtr map5q = share(build_constant(cyclic_table(5), rationals()));
  l.expect(matrices_equal(unit_form(map5q).gram(), Mat(Mat::Identity(5, 5))), "kappa on Q[C5] is the identity on C5");

  const HopfPtr mu5 = share(build_mu_n(5, z6()));
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  const std::vector<std::pair<std::string, HopfPtr>> cases = {{"Map(C5) over Q", map5q},
                                                               {"mu_5", mu5},
                                                               {"dual of mu_5", share(dual(*mu5))},
                                                               {"Map(S3)", share(build_constant(symmetric3_table(), z6()))},
                                                               {"dihedral A", ds.a}};
  for (const auto& [tag, a] : cases) {
    const SymBundle k = unit_form(a);
    l.expect(k.is_symmetric(), tag + ": kappa symmetric");
    l.expect(is_equivariant(k), tag + ": kappa equivariant");
    l.expect(has_unit_determinant(k.gram(), a->ring()), tag + ": kappa unit determinant");
    const IntegralData d = integrals(*a, Side::Left, true);
    const FixedForm f = fixed_form(k, *d.theta_dual);
    l.expect(f.well_defined && matrices_equal(f.gram, Mat(Mat::Identity(1, 1))), tag + ": kappa^A = <1>");
  }
  // oracle for mu_5: kappa(f_i, f_j) = 1 exactly when i + j = 0 mod 5
  const Mat g = unit_form(mu5).gram();
  bool ok = true;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) ok = ok && g(i, j) == FieldElem((i + j) % 5 == 0 ? 1L : 0L);
  l.expect(ok, "mu_5: kappa(f_i, f_j) = [i + j = 0]");
}

void trivial_torsor_twists(Ledger& l) {
  auto g = rng(1207);
  struct Case {
    std::string tag;
    SymBundle bundle;
    FieldElem sqrt;
  };
  const HopfPtr map5 = share(build_constant(cyclic_table(5), z6()));
  const HopfPtr mu5 = share(build_mu_n(5, r5()));
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  std::vector<Case> cases = {{"(V, q)", build_v_form(mu5), sqrt5()},
                             {"unit form of mu_5", unit_form(mu5), sqrt5()},
                             {"unit form of Map(C5)", unit_form(map5), FieldElem(1L)},
                             {"dihedral (M, q)", ds.bundle, FieldElem(1L)}};
  for (int r = 1; r <= 2; ++r) {
    cases.push_back({"random rank " + std::to_string(r) + " over Map(C5)", random_equivariant_bundle(g, map5, r),
                     FieldElem(1L)});
    cases.push_back({"random rank " + std::to_string(r) + " over mu_5", random_equivariant_bundle(g, mu5, r), sqrt5()});
  }
  for (const auto& c : cases) {
    const HopfPtr& a = c.bundle.module()->hopf_ptr();
    const TwistResult t = twist(c.bundle, trivial_torsor(a), c.sqrt);
    l.expect(t.well_defined, c.tag + ": twist well defined");
    const Mat nu = trivial_twist_isometry(c.bundle, t);
    l.expect(verify_isometry(nu, t.gram, c.bundle.gram(), a->ring()), c.tag + ": nu is an isometry onto the input");
    const int m = c.bundle.rank();
    l.expect(matrices_equal(Mat(trivial_twist_inverse(t) * t.basis * nu), Mat(Mat::Identity(m, m))),
             c.tag + ": mu nu = id");
  }
}

void unit_form_twists(Ledger& l) {
  const HopfPtr mu5 = share(build_mu_n(5, r5()));
  const H2Data h2 = check_H2(*mu5, sqrt5());
  const SymBundle kappa = unit_form(mu5, h2.theta);
  for (long y : {1L, 2L, 3L, -1L}) {
    const std::string tag = "y = " + std::to_string(y);
    const PHS b = build_kummer_torsor(mu5, FieldElem(y));
    const SymBundle tb = trace_bundle(b, sqrt5());
    // oracle: Tr(x^k x^l) / 5 is 1 at k = l = 0, y at k + l = 5, else 0
    bool ok = true;
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 5; ++j) {
        const long e = (k == 0 && j == 0) ? 1 : (k + j == 5 ? y : 0);
        ok = ok && tb.gram()(k, j) == FieldElem(e);
      }
    l.expect(ok, tag + ": trace form on D^(-1/2)(B_y)");
    const TwistResult t = twist(kappa, b, h2);
    l.expect(t.well_defined, tag + ": twist well defined");
    const Mat w = unit_form_twist_isometry(b, t);
    l.expect(verify_isometry(w, t.gram, tb.gram(), r5()), tag + ": phi witness is an isometry");
  }
  const ExampleReport rep = run_example("unit-form-twist", {});
  for (const auto& c : rep.checks) l.expect(c.passed, "unit-form-twist example: " + c.name);
}

void kummer_twists(Ledger& l) {
  const HopfPtr mu5 = share(build_mu_n(5, r5()));
  const SymBundle v = build_v_form(mu5);
  const int p = 5, m = 2;
  for (long yl : {1L, 2L, 3L, -1L}) {
    const auto t0 = Clock::now();
    const std::string tag = "y = " + std::to_string(yl);
    const FieldElem y(yl);
    const H2Data h2 = check_H2(*mu5, sqrt5());
    const TwistResult t = twist(v, build_kummer_torsor(mu5, y), h2);
    l.expect(t.well_defined, tag + ": twist well defined");
    // the named basis x^(p-1) (x) e1, x (x) e2, both scaled by 5^(-1/2)
    Mat named(p * m, 2);
    named.setZero();
    named((p - 1) * m + 0, 0) = FieldElem(1L);
    named(1 * m + 1, 1) = FieldElem(1L);
    l.expect(lattice_equal(t.basis, named, r5()), tag + ": fixed lattice spanned by the named basis");
    const Mat g = t.gram_on(named);
    const FieldElem half_y(Rational(yl) / 2);
    l.expect(g(0, 0).is_zero() && g(1, 1).is_zero() && g(0, 1) == half_y && g(1, 0) == half_y,
             tag + ": Gram = [[0, y/2], [y/2, 0]]");
    const Mat w = diag({FieldElem(1L), y.inverse()});
    l.expect(verify_isometry(w, g, v.gram(), r5()), tag + ": diag(1, 1/y) certifies (V, q) = (V_y, q_y)");
    const double secs = seconds_since(t0);
    l.expect(secs < 10.0, tag + ": runtime " + std::to_string(secs) + " s < 10 s");
  }
}

void dihedral_twist(Ledger& l) {
  const RingSpec dr = dihedral_ring();
  const DihedralParams p = default_dihedral_params(dr);
  const FieldElem z = dr.generator();
  l.expect(p.delta_sq == z && p.alpha0.is_zero() && p.alpha1 == FieldElem(1L), "parameters delta^2 = zeta_3, alpha = delta");
  const DihedralSuite ds = build_dihedral(dr, p);
  // oracle: tau(delta) = -delta, so a = delta tau(delta) = -delta^2 = -zeta_3
  const FieldElem a = -p.delta_sq;
  l.expect(ds.a_unit == a, "a = -zeta_3");
  const ExampleReport rep = verify_dihedral_twist(dr, p);
  for (const auto& c : rep.checks) l.expect(c.passed, "dihedral-twist: " + c.name);
  const Mat& g = rep.matrices.at("twist Gram on (eps1, eps2)");
  const FieldElem two(2L);
  l.expect(matrices_equal(g, diag({two * a, -two * a * p.delta_sq})), "Gram = diag(2a, -2a delta^2)");
  l.expect(same_square_class(determinant(g), -p.delta_sq, two * a), "discriminant -delta^2 up to squares");

  const H2Data h2 = check_H2(*ds.a, FieldElem(1L));
  const PrincipalIdeal lambda(h2.lambda, dr);
  l.expect(codifferent(ds.b) == lambda.inverse(), "codifferent by dual lattice = Lambda^(-1) B");
  l.expect(trace_is_integral_action(ds.b, h2), "Tr(x) = (lambda theta_dual) x");
  l.expect(scalar_extension_integrals_check(ds.b), "I(B (x) A) = B (x) I(A)");
}

QMat qmat2(long a, long b, long c, long d) {
  QMat m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

Mat to_field(const QMat& q) {
  Mat m(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m(i, j) = FieldElem(q(i, j));
  return m;
}

void rational_isometry(Ledger& l) {
  struct Pair {
    std::string tag;
    QMat p, g1, g2;
    bool isometric;
  };
  QMat half(2, 2);
  half << Rational(1), Rational(1, 2), Rational(1), Rational(-1, 2);
  const std::vector<Pair> pairs = {
      {"<1,1> vs <2,2>", qmat2(1, 1, 1, -1), qmat2(1, 0, 0, 1), qmat2(2, 0, 0, 2), true},
      {"<1,-1> vs hyperbolic", half, qmat2(1, 0, 0, -1), qmat2(0, 1, 1, 0), true},
      {"<1,1> vs <1,-1>", qmat2(1, 0, 0, 1), qmat2(1, 0, 0, 1), qmat2(1, 0, 0, -1), false}};
  for (const auto& c : pairs) {
    const bool witnessed = verify_isometry(to_field(c.p), to_field(c.g1), to_field(c.g2), rationals());
    l.expect(witnessed == c.isometric, c.tag + ": witness");
    l.expect(decide_isometry_Q(c.g1, c.g2) == c.isometric, c.tag + ": decision agrees with the witness");
    l.expect(rational_invariants(c.g1).product_formula() && rational_invariants(c.g2).product_formula(),
             c.tag + ": product formula");
  }
  l.expect(!decide_isometry_Q(qmat2(1, 0, 0, -2), qmat2(1, 0, 0, 2)), "<1,-2> vs <1,2>: determinant classes differ");

  auto g = rng(1211);
  int generated = 0;
  while (generated < 50) {
    const int n = 2 + generated % 3;
    QMat gram(n, n), p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) gram(i, j) = gram(j, i) = small_rational(g, 7, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = small_rational(g, 4, 2);
    if (sgn(determinant(gram)) == 0 || sgn(determinant(p)) == 0) continue;
    const QMat image = p.transpose() * gram * p;
    const std::string tag = "random pair " + std::to_string(generated);
    l.expect(verify_isometry(to_field(p), to_field(gram), to_field(image), rationals()), tag + ": witness");
    l.expect(decide_isometry_Q(gram, image), tag + ": decided isometric");
    l.expect(rational_invariants(gram).product_formula() && rational_invariants(image).product_formula(),
             tag + ": product formula");
    ++generated;
  }
}

std::string data(const std::string& name) { return (fs::path(HOPFTWIST_DATA_DIR) / name).string(); }

std::pair<int, std::string> in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::pair<int, std::string> subprocess(const std::vector<std::string>& args) {
  std::string cmd = HOPFTWIST_CLI;
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void determinism(Ledger& l) {
  const std::vector<std::vector<std::string>> pipelines = {
      {"--report", "json", "examples", "run-all"},
      {"--report", "junit", "examples", "run-all"},
      {"examples", "run", "kummer-twist", "--y", "3"},
      {"--report", "json", "hopf", "integrals", data("mu5.json")},
      {"--report", "json", "hopf", "validate", data("mu5_corrupted.json")},
      {"--report", "json", "hopf", "check-h2", data("mu5.json"), "--sqrt", "sqrt5"},
      {"--report", "json", "comodule", "fixed-points", data("v_comodule.json")},
      {"--report", "json", "form", "invariants", data("form_q_hyperbolic.json")},
      {"--report", "json", "twist", "--hopf", data("mu5.json"), "--phs", data("by2.json"), "--bundle", data("v.json"),
       "--sqrt", "sqrt5"}};
  for (const auto& args : pipelines) {
    std::string tag;
    for (const auto& a : args) tag += (tag.empty() ? "" : " ") + fs::path(a).filename().string();
    const auto a = in_process(args);
    const auto b = in_process(args);
    l.expect(!a.second.empty() && a == b, tag + ": in-process runs identical");
    const auto c = subprocess(args);
    const auto d = subprocess(args);
    l.expect(c == d && c == a, tag + ": binary runs identical to each other and to the in-process run");
  }
  const fs::path dir = fs::temp_directory_path() / "hopftwist_acceptance";
  fs::create_directories(dir);
  const std::vector<std::string> base = {"twist",         "--hopf", data("mu5.json"), "--phs", data("by2.json"),
                                         "--bundle",      data("v.json"), "--sqrt", "sqrt5", "--out"};
  auto first = base, second = base;
  first.push_back((dir / "first.json").string());
  second.push_back((dir / "second.json").string());
  l.expect(in_process(first).first == 0 && subprocess(second).first == 0, "twist --out runs succeed");
  const std::string f1 = slurp(dir / "first.json"), f2 = slurp(dir / "second.json");
  l.expect(!f1.empty() && f1 == f2, "twist --out files identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ledger&)>>> criteria = {
      {"axiom suite and named negative controls", axioms},
      {"integrals as exact lattices, eps(theta) eps_D(theta_dual) = n", integral_lattices},
      {"theta pairing and unit-determinant theta map", theta_pairing},
      {"fixed points via theta_dual and coinvariants on random free modules", fixed_point_machinery},
      {"Hom over A^D equals A-fixed R-linear maps", hom_identity},
      {"unit form predicates and kappa^A = <1>", unit_forms},
      {"trivial-torsor twist isometric through nu", trivial_torsor_twists},
      {"twist of the unit form is the trace bundle", unit_form_twists},
      {"Kummer twist of (V, q) for y in {1, 2, 3, -1}", kummer_twists},
      {"dihedral twist Gram, discriminant and codifferent", dihedral_twist},
      {"isometry over Q: witnesses, decisions, product formula", rational_isometry},
      {"CLI determinism", determinism}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ledger l;
    const auto t0 = Clock::now();
    std::string error;
    try {
      criteria[i].second(l);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = l.ok() && error.empty();
    if (!ok) ++failed;
    std::printf("%s %2zu %s (%d checks, %.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), l.count(),
                seconds_since(t0));
    for (const auto& f : l.failures()) std::printf("       failed: %s\n", f.c_str());
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
