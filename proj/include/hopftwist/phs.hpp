#pragma once

// Principal homogeneous spaces, trace bundles, codifferents, the unit form
// and the twist of an equivariant symmetric bundle by a torsor.

#include <string>
#include <vector>

#include "hopftwist/symbundle.hpp"

namespace hopftwist {

/// A commutative algebra B with a coaction B -> B (x) A on its basis.
class PHS {
 public:
  PHS(FiniteAlgebra alg, Comodule coaction);

  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  const Comodule& comodule() const noexcept { return coaction_; }
  const HopfAlgebra& hopf() const noexcept { return coaction_.hopf(); }
  const RingSpec& ring() const noexcept { return alg_.ring(); }
  int rank() const noexcept { return alg_.rank(); }

 private:
  FiniteAlgebra alg_;
  Comodule coaction_;
};

/// A itself with Delta as coaction.
PHS trivial_torsor(const HopfPtr& a);

/// Matrix of b (x) b' -> (b (x) 1) alpha(b'), columns indexed i * n + j.
Mat phi_matrix(const PHS& b);

struct PHSReport {
  std::vector<std::string> failures;  // commutative, comodule, algebra_map, fixed_points, phi
  FieldElem phi_det;
  bool ok() const { return failures.empty(); }
  bool has(const std::string& name) const;
};
PHSReport is_phs(const PHS& b);

/// Lambda^{-1} with Lambda = eps(I(A)), checked against the dual lattice of
/// the trace form of B; throws DualLatticeMismatch if they differ.
PrincipalIdeal codifferent(const PHS& b);

/// (lambda_sqrt^{-1} B, Tr) as an A-equivariant bundle on the basis
/// lambda_sqrt^{-1} e_i. Throws H2Failure if the form is not perfect.
SymBundle trace_bundle(const PHS& b, const FieldElem& lambda_sqrt);

/// kappa(u, v) = <S^D(u) v, theta> on A^D with its left regular action.
SymBundle unit_form(const HopfPtr& a, const Vec& theta);
/// Same with the left-integral generator of A.
SymBundle unit_form(const HopfPtr& a);

struct TwistResult {
  Mat basis;         // fixed lattice, coordinates on lambda_sqrt^{-1} e_i (x) m_j at i * m + j
  Mat gram;          // (Tr (x) q)^A on `basis`
  Mat preimages;
  bool well_defined = false;
  Vec theta;
  Vec theta_dual;
  FieldElem lambda_sqrt;
  Comodule module;   // lambda_sqrt^{-1} B (x) M
  Mat module_gram;   // Tr (x) q on it

  /// Gram of the twisted form on other fixed vectors (columns in module coordinates).
  Mat gram_on(const Mat& fixed_vectors) const;
};

TwistResult twist(const SymBundle& m, const PHS& b, const H2Data& h2);
TwistResult twist(const SymBundle& m, const PHS& b, const FieldElem& lambda_sqrt);

/// Matrix of nu: m -> theta_dual (lambda_sqrt^{-1} theta (x) m) in the basis of
/// `t`, the twist of the same bundle by the trivial torsor.
Mat trivial_twist_isometry(const SymBundle& m, const TwistResult& t);
/// Matrix of mu: x -> lambda_sqrt * eps~(x) from module coordinates to M.
Mat trivial_twist_inverse(const TwistResult& t);

/// Matrix of beta -> theta_dual (beta (x) 1) from the trace bundle of B into the
/// twist of the unit form by B.
Mat unit_form_twist_isometry(const PHS& b, const TwistResult& t);

/// psi_B(lambda * theta_dual) x == Tr(x) 1 for every basis element x.
bool trace_is_integral_action(const PHS& b, const H2Data& h2);

/// I(B (x) A) == B (x) I(A) as lattices, the left side from its own kernel.
bool scalar_extension_integrals_check(const PHS& b);

}  // namespace hopftwist
