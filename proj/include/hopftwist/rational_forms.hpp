#pragma once

// Invariants of nondegenerate symmetric bilinear forms over Q and the
// resulting isometry decision (rank, determinant class, signature, Hasse).

#include <map>
#include <vector>

#include "hopftwist/field.hpp"

namespace hopftwist {

struct Diagonalization {
  std::vector<Rational> diagonal;
  QMat change;  // change^T * G * change = diag(diagonal)
};

/// Symmetric Gaussian elimination; a zero pivot is repaired by e_i <- e_i + e_j.
Diagonalization diagonalize(const QMat& gram);

/// Squarefree integer in the class of q modulo rational squares (q != 0).
Integer squarefree_part(const Rational& q);

/// Prime factors of |n| in increasing order.
std::vector<Integer> prime_factors(Integer n);

/// Hilbert symbol (a, b)_p; p = 0 denotes the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

struct FormInvariants {
  int rank = 0;
  Integer det_class;             // squarefree representative of det mod squares
  int positive = 0;
  int negative = 0;
  std::map<Integer, int> hasse;  // finite primes with their Hasse symbol
  int hasse_real = 1;

  /// Hasse symbol at p (0 = real place); +1 at primes outside the map.
  int hasse_at(const Integer& p) const;
  /// Product over all places equals +1.
  bool product_formula() const;
};

/// Throws SingularForm for a degenerate Gram matrix.
FormInvariants rational_invariants(const QMat& gram);
bool decide_isometry_Q(const QMat& g1, const QMat& g2);

}  // namespace hopftwist
