#pragma once

// Lattices over Z and over the base ring R.
//
// R is free over Z_S (or Z_(P)) on the order basis, so an R-submodule of K^m
// is handled through its restriction of scalars: the Z_S-span of b_t * v for
// each order basis element b_t and each generator v.

#include "hopftwist/linalg.hpp"
#include "hopftwist/ring.hpp"

namespace hopftwist {

struct ColumnHermite {
  ZMat basis;      // nonzero echelon columns spanning the column lattice
  ZMat transform;  // unimodular U with A*U = [basis | 0]; empty unless requested
};

/// Column Hermite echelon form over Z.
ColumnHermite column_hermite(ZMat a, bool with_transform);

/// Z-basis (columns) of {x in Z^k : a x = 0}.
ZMat integer_kernel(const ZMat& a);

/// Multiply a rational matrix by the lcm of its denominators; returns that lcm.
Integer clear_denominators(const QMat& a, ZMat& out);

/// Columns b_t * v_i in order-basis coordinates: (d*m) x (d*k).
QMat restrict_scalars(const Mat& gens, const RingSpec& r);
/// Inverse of the coordinate map: a (d*m)-column back to a vector in K^m.
Vec extend_scalars(const QMat& col, const RingSpec& r);

/// A Z-basis (scaled back to rationals) of the Z_S-span of the columns.
QMat base_lattice_basis(const QMat& gens);

/// Whether the R-span of `small` lies inside the R-span of `big`.
bool lattice_contains(const Mat& big, const Mat& small, const RingSpec& r);
bool lattice_equal(const Mat& a, const Mat& b, const RingSpec& r);

/// R-basis of (K-span of columns) intersected with R^m, canonicalised by
/// echelon form over K. Throws LatticeNotFree when no basis is found.
Mat saturated_basis(const Mat& gens, const RingSpec& r);

/// Whether the R-span of the columns equals its saturation in R^m.
bool is_saturated(const Mat& gens, const RingSpec& r);

/// Whether a square matrix over R has a unit determinant.
bool has_unit_determinant(const Mat& m, const RingSpec& r);

}  // namespace hopftwist
