#pragma once

// Finite free R-algebras given by structure constants on a basis e_0..e_{n-1}.

#include <functional>
#include <string>
#include <vector>

#include "hopftwist/lattice.hpp"

namespace hopftwist {

using AlgebraElem = Vec;

class FiniteAlgebra {
 public:
  /// `left[i]` is the matrix of x -> e_i * x, so c_ij^k = left[i](k, j).
  /// Structure constants and unit must lie in R.
  FiniteAlgebra(RingSpec ring, std::vector<Mat> left, Vec unit);

  /// Builds from c(i, j) = coordinates of e_i * e_j.
  static FiniteAlgebra from_products(RingSpec ring, int n, const std::function<Vec(int, int)>& product, Vec unit);

  int rank() const noexcept { return n_; }
  const RingSpec& ring() const noexcept { return ring_; }
  const Vec& unit() const noexcept { return unit_; }
  const std::vector<Mat>& left_matrices() const noexcept { return left_; }

  FieldElem structure_constant(int i, int j, int k) const { return left_[i](k, j); }
  AlgebraElem basis_vector(int i) const;

  AlgebraElem multiply(const AlgebraElem& x, const AlgebraElem& y) const;
  /// Column j is x * e_j.
  Mat left_mult_matrix(const AlgebraElem& x) const;
  /// Column j is e_j * x.
  Mat right_mult_matrix(const AlgebraElem& x) const;
  FieldElem regular_trace(const AlgebraElem& x) const;
  /// G_ij = Tr((s e_i)(s e_j)).
  Mat trace_gram(const FieldElem& scale) const;

  bool is_commutative() const;
  /// Named failures among "associativity", "unit", "integrality".
  std::vector<std::string> validate() const;

 private:
  RingSpec ring_;
  int n_;
  std::vector<Mat> left_;
  Vec unit_;
};

/// Tensor product algebra A (x) B with basis e_i (x) f_j at index i * rank(B) + j.
FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace hopftwist
