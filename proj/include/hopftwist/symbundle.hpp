#pragma once

// Symmetric bundles: a lattice R^m with a symmetric Gram matrix, optionally
// carrying an A-comodule structure.

#include <optional>

#include "hopftwist/comodule.hpp"

namespace hopftwist {

class SymBundle {
 public:
  SymBundle(RingSpec ring, Mat gram);
  SymBundle(Comodule module, Mat gram);

  const RingSpec& ring() const noexcept { return ring_; }
  const Mat& gram() const noexcept { return gram_; }
  const std::optional<Comodule>& module() const noexcept { return module_; }
  int rank() const noexcept { return static_cast<int>(gram_.rows()); }

  bool is_symmetric() const;
  /// det(gram) is a unit of R.
  bool is_nondegenerate() const;

 private:
  RingSpec ring_;
  std::optional<Comodule> module_;
  Mat gram_;
};

/// q(g m, n) = q(m, S^D(g) n) for every dual basis element g.
bool is_equivariant(const SymBundle& b);

struct FixedForm {
  Mat basis;       // R-basis of M^A, columns in M coordinates
  Mat preimages;   // m_i with theta_dual * m_i = basis_i
  Mat gram;        // (q^A)_ij = q(m_i, basis_j)
  Mat free_basis;  // A^D-basis certificate of M
  bool well_defined = false;  // recomputation from shifted preimages agrees
};

/// The form q^A on M^A built from theta_dual, the generator of the integrals
/// of A^D. Throws H1Failure, NotEquivariant or FreenessUncertified when the
/// preconditions fail, SingularForm if the result is not a perfect pairing.
FixedForm fixed_form(const SymBundle& b, const Vec& theta_dual);
/// Same, with a caller-supplied A^D-basis that is certified before use.
FixedForm fixed_form(const SymBundle& b, const Vec& theta_dual, const Mat& free_basis);

/// q^A on the given fixed vectors (columns in M coordinates).
Mat fixed_form_on(const SymBundle& b, const Vec& theta_dual, const Mat& fixed_vectors);

/// P^T G1 P == G2 with P and P^{-1} over R.
bool verify_isometry(const Mat& p, const SymBundle& b1, const SymBundle& b2);
bool verify_isometry(const Mat& p, const Mat& g1, const Mat& g2, const RingSpec& r);

FieldElem discriminant(const SymBundle& b);
/// d1 == d2 * s^2.
bool same_square_class(const FieldElem& d1, const FieldElem& d2, const FieldElem& s);

}  // namespace hopftwist
