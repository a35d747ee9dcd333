#pragma once

// Hopf algebra structure on a finite free algebra: axioms, duality, integrals
// and the hypotheses on them used by the twisting construction.

#include <optional>
#include <string>
#include <vector>

#include "hopftwist/algebra.hpp"

namespace hopftwist {

class HopfAlgebra {
 public:
  /// `comult` is n^2 x n with column i = Delta(e_i), row j*n+k the coefficient
  /// of e_j (x) e_k. `counit(i)` = eps(e_i). Column c of `antipode` is S(e_c).
  HopfAlgebra(FiniteAlgebra alg, Mat comult, Vec counit, Mat antipode);

  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  const RingSpec& ring() const noexcept { return alg_.ring(); }
  int rank() const noexcept { return alg_.rank(); }
  const Mat& comult() const noexcept { return comult_; }
  const Vec& counit() const noexcept { return counit_; }
  const Mat& antipode() const noexcept { return antipode_; }

  FieldElem counit_of(const AlgebraElem& x) const;
  /// Delta(x) as a vector of length n^2.
  Vec comultiply(const AlgebraElem& x) const;

  /// Matrix of the action of f_k (dual basis of A^D) on A, a -> sum <f_k, a_(2)> a_(1).
  Mat regular_dual_action(int k) const;
  /// Matrix of the action of g in A^D (coordinates on the dual basis) on A.
  Mat regular_dual_action(const Vec& g) const;

 private:
  FiniteAlgebra alg_;
  Mat comult_;
  Vec counit_;
  Mat antipode_;
};

struct HopfReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  bool has(const std::string& name) const;
};

/// Checks associativity, unit, coassociativity, counit, antipode,
/// antipode_involution, comult_multiplicative, counit_multiplicative and
/// integrality on basis elements.
HopfReport validate_hopf(const HopfAlgebra& h);

/// The dual Hopf algebra on the dual basis f_0..f_{n-1}.
HopfAlgebra dual(const HopfAlgebra& h);

bool hopf_equal(const HopfAlgebra& a, const HopfAlgebra& b);

enum class Side { Left, Right };

struct IntegralData {
  Vec span_k;                       // spans the integrals over K
  std::optional<Vec> theta;         // R-generator of the integrals of A
  std::optional<Vec> theta_dual;    // element of A^D with theta_dual . theta = 1_A
};

/// Stacked linear system whose kernel is the space of integrals over K.
Mat integral_equations(const HopfAlgebra& h, Side side);

/// Integrals of h. For the left side the R-generator is searched and
/// certified through theta_dual; `require_generator` turns a failed search
/// into NoFreeGenerator.
IntegralData integrals(const HopfAlgebra& h, Side side = Side::Left, bool require_generator = false);

/// Certifies a caller-supplied generator theta of the left integrals.
IntegralData integrals_with_witness(const HopfAlgebra& h, const Vec& theta);

/// The unique u in A^D_K with u . theta = 1_A, or nullopt.
std::optional<Vec> solve_theta_dual(const HopfAlgebra& h, const Vec& theta);

/// Matrix of u -> u . theta from A^D to A.
Mat theta_map(const HopfAlgebra& h, const Vec& theta);

bool is_unimodular(const HopfAlgebra& h);
/// +1 or -1 with S(x) = sign * x on integrals; throws H1Failure if not unimodular.
int antipode_on_integrals(const HopfAlgebra& h);
bool is_separable(const FiniteAlgebra& a);
bool check_H1(const HopfAlgebra& h);

struct H2Data {
  FieldElem lambda;        // eps(theta) for the R-generator theta
  FieldElem lambda_sqrt;   // the witness
  Vec theta;               // lambda_sqrt^2 * e with e = theta_gen / eps(theta_gen)
  Vec theta_dual;
  Vec idempotent;          // e
};

/// Checks commutativity, separability and the square condition; on success
/// returns the normalised theta = lambda_sqrt^2 * e and its theta_dual.
H2Data check_H2(const HopfAlgebra& h, const FieldElem& sqrt_witness);

/// eps(theta) * eps_D(theta_dual) == rank for the left-integral generator pair.
bool counit_product_check(const HopfAlgebra& h);
bool counit_product_check(const HopfAlgebra& h, const Vec& theta, const Vec& theta_dual);

}  // namespace hopftwist
