#pragma once

// Constructors for the worked examples (constant groups, group algebras, mu_n,
// Kummer torsors, the dihedral order) and executable checks of their claims.

#include <map>
#include <string>
#include <vector>

#include "hopftwist/phs.hpp"

namespace hopftwist {

/// Cayley table: table[a][b] = index of a * b.
using GroupTable = std::vector<std::vector<int>>;

GroupTable cyclic_table(int n);
GroupTable symmetric3_table();
/// sigma^i tau^j at index i + n * j.
GroupTable dihedral_table(int n);

/// Throws BadGroupTable unless the table is a group; returns the identity.
int validate_group_table(const GroupTable& t);
std::vector<int> group_inverses(const GroupTable& t);

/// Map(G, R) on the indicator basis.
HopfAlgebra build_constant(const GroupTable& t, const RingSpec& r);
/// R[G] on the group basis.
HopfAlgebra build_group_algebra(const GroupTable& t, const RingSpec& r);
/// R[t]/(t^n - 1) with t group-like, basis t^k.
HopfAlgebra build_mu_n(int n, const RingSpec& r);

/// The same Hopf algebra on the basis given by the columns of p.
HopfAlgebra change_basis(const HopfAlgebra& h, const Mat& p);

/// Z[zeta_n] with the listed primes inverted; constant "zeta" is the generator,
/// and "sqrt<p>" is the quadratic Gauss sum when n = p is a prime = 1 mod 4.
RingSpec cyclotomic_ring(int n, std::vector<long> inverted);
FieldElem gauss_sum_sqrt(int p, const RingSpec& r);

/// (V, q) with alpha(e1) = e1 (x) t, alpha(e2) = e2 (x) t^{n-1}, q(e1, e2) = 1/2.
SymBundle build_v_form(const HopfPtr& mu_n);
/// Same form with alpha(e2) = e2 (x) t.
SymBundle build_v_form_corrupted(const HopfPtr& mu_n);
/// Columns e1 + e2 and i(e1 - e2).
Mat v_form_diagonalizer(const FieldElem& i);

/// R[x]/(x^p - y) with alpha(x^k) = x^k (x) t^k. Throws NotAUnit when
/// `require_unit` is set and y is not a unit.
PHS build_kummer_torsor(const HopfPtr& mu_p, const FieldElem& y, bool require_unit = true);

/// R[x]/(x^n - u) as a Map(C_n, R)-torsor, sigma^k x = zeta^k x.
PHS build_cyclic_kummer_for_constant(const HopfPtr& map_cn, const FieldElem& zeta, const FieldElem& u);

struct DihedralParams {
  int n = 3;
  int chi = 1;               // chi(sigma) = zeta^chi
  FieldElem zeta;            // primitive n-th root of unity in R
  FieldElem delta_sq;        // delta^2, E = R + R delta
  FieldElem alpha0, alpha1;  // alpha = alpha0 + alpha1 delta
};

/// n = 3 over Z[zeta_3][1/30] with delta^2 = zeta_3 and alpha = delta.
RingSpec dihedral_ring();
DihedralParams default_dihedral_params(const RingSpec& r);

struct DihedralSuite {
  RingSpec ring;
  DihedralParams params;
  HopfPtr group_algebra;  // R[D]
  Mat h_basis;            // columns: e_phi, then e_phi tau, in group coordinates
  HopfPtr h;              // M o <tau> on h_basis
  HopfPtr a;              // H^D
  SymBundle bundle;       // (M, q), basis e_chi, e_chibar tau
  PHS b;                  // E[x]/(x^n - alpha^n)
  FieldElem a_unit;       // alpha * tau(alpha)
  Mat sigma_on_b;
  Mat tau_on_b;
  Vec x;                  // x in B
  Vec delta;              // delta in B
};

/// Throws BadParameter or NotAUnit when the parameters are unusable.
DihedralSuite build_dihedral(const RingSpec& r, const DihedralParams& p);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  std::string name;
  std::vector<Check> checks;
  std::map<std::string, Mat> matrices;

  void add(const std::string& check, bool passed, const std::string& detail = "");
  bool ok() const;
  const Check* find(const std::string& check) const;
};

/// Integrals of F_p[G] computed modulo p.
struct ModPIntegrals {
  int dimension = 0;
  std::vector<long> generator;
  bool antipode_fixes = false;
};
ModPIntegrals fp_group_algebra_integrals(const GroupTable& t, long p);

ExampleReport verify_axioms();
ExampleReport verify_integrals();
ExampleReport verify_unit_form();
ExampleReport verify_v_form();
/// Twist of (V, q) by B_y over Z[zeta_p][1/6] with the Gauss-sum witness.
ExampleReport verify_kummer_twist(int p, const FieldElem& y);
/// Twist of the unit form: Map(C_5, Q) with the trivial torsor.
ExampleReport verify_unit_form_twist_constant();
/// Twist of the unit form of mu_5 by B_y.
ExampleReport verify_unit_form_twist_kummer(const FieldElem& y);
/// Twist of the unit form of Map(C_3, R) by R[x]/(x^3 - u).
ExampleReport verify_unit_form_twist_cyclic(const FieldElem& u);
/// Trivial-torsor twists with the explicit nu witness.
ExampleReport verify_trivial_twists();
ExampleReport verify_dihedral(const RingSpec& r, const DihedralParams& p);
ExampleReport verify_dihedral_twist(const RingSpec& r, const DihedralParams& p);

std::vector<std::string> example_names();
/// Runs a named example; parameters are given as expression strings.
ExampleReport run_example(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace hopftwist
