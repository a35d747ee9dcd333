#pragma once

// Right A-comodules and the equivalent left A^D-module structures.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopftwist/hopf.hpp"

namespace hopftwist {

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

inline HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

/// psi(f_k) for the dual basis f_0..f_{n-1} of A^D.
struct ModuleAction {
  std::vector<Mat> acts;
  int rank() const { return acts.empty() ? 0 : static_cast<int>(acts[0].rows()); }
  /// Matrix of g = sum g_k f_k.
  Mat of(const Vec& g) const;
};

class Comodule {
 public:
  /// `coaction` is (m*n) x m; column i = alpha(e_i), row j*n+k the
  /// coefficient of e_j (x) a_k.
  Comodule(HopfPtr hopf, Mat coaction);

  const HopfPtr& hopf_ptr() const noexcept { return hopf_; }
  const HopfAlgebra& hopf() const noexcept { return *hopf_; }
  const RingSpec& ring() const noexcept { return hopf_->ring(); }
  int rank() const noexcept { return m_; }
  const Mat& coaction() const noexcept { return coaction_; }

  /// psi(f_k): m -> sum <f_k, m_(1)> m_(0).
  Mat action(int k) const;
  Mat action(const Vec& g) const;

  /// Named failures among "coassociativity", "counit", "integrality".
  std::vector<std::string> validate() const;

 private:
  HopfPtr hopf_;
  int m_;
  Mat coaction_;
};

ModuleAction to_module(const Comodule& m);
Comodule from_module(HopfPtr hopf, const ModuleAction& act);
/// Associativity and unit axioms of an A^D-action.
bool is_module_action(const HopfAlgebra& h, const ModuleAction& act);

Comodule trivial_comodule(HopfPtr hopf, int m);
/// A over itself through Delta.
Comodule regular_comodule(HopfPtr hopf);
/// A^D with the left regular action of A^D.
Comodule dual_regular_comodule(HopfPtr hopf);

/// R-basis of M^A from the kernel of the stacked (psi(f_k) - f_k(1)).
Mat fixed_points(const Comodule& m);
/// R-span of the columns of psi(theta_dual), as a saturated-basis candidate set.
Mat fixed_points_via_theta(const Comodule& m, const Vec& theta_dual);

struct FixedPointReport {
  Mat basis;              // from the kernel
  bool theta_route = false;   // whether the theta_dual route was evaluated
  bool theta_agrees = false;  // kernel lattice == theta_dual * M
};
FixedPointReport fixed_points_checked(const Comodule& m, const std::optional<Vec>& theta_dual);

struct CoinvariantReport {
  Mat relations;          // generators of ker(eps_D) M
  int quotient_rank = 0;  // rank of M_A
  bool kills_relations = false;   // theta_dual annihilates ker(eps_D) M
  bool kernel_matches = false;    // saturated kernel of theta_dual equals ker(eps_D) M
  bool image_matches = false;     // theta_dual M equals M^A
  bool ok() const { return kills_relations && kernel_matches && image_matches; }
};
CoinvariantReport coinvariants(const Comodule& m, const Vec& theta_dual);

/// Diagonal coaction on M (x) N; basis e_i (x) e_j at index i * rank(N) + j.
Comodule tensor_diagonal(const Comodule& m, const Comodule& n);

/// Action on Hom_R(M, N), phi stored row-major at a * rank(M) + b.
ModuleAction hom_module(const Comodule& m, const Comodule& n);
/// R-basis of the A^D-linear maps M -> N, row-major as above.
Mat equivariant_maps(const Comodule& m, const Comodule& n);
/// Hom_{A^D}(M, N) == Hom_R(M, N)^A as lattices.
bool hom_fixed_check(const Comodule& m, const Comodule& n);

/// A^D-basis w_1..w_s of M with [psi(f_k) w_i] square of unit determinant,
/// found by greedy accumulation of cyclic vectors followed by a descent on the
/// index of their span. Columns of the result are
/// the w_i; nullopt when the search fails.
std::optional<Mat> free_basis_over_dual(const Comodule& m);

/// True when the columns of w form an A^D-basis of M.
bool is_free_basis(const Comodule& m, const Mat& w);

/// A^D-basis of tensor_diagonal(b, m) made of the e_i (x) w_j, where w is an
/// A^D-basis of m; nullopt when m has no certified basis.
std::optional<Mat> tensor_free_basis(const Comodule& b, const Comodule& m);

}  // namespace hopftwist
