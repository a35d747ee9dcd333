#pragma once

// Exact arithmetic in a number field K = Q[x]/(m(x)).
//
// FieldElem is usable as an Eigen scalar. An element built from an integer or
// a rational without a field attached ("free rational") combines with any
// field element, which is what Eigen needs for Scalar(0) and Scalar(1).

#include <gmpxx.h>

#include <Eigen/Core>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "hopftwist/errors.hpp"

namespace hopftwist {

using Rational = mpq_class;
using Integer = mpz_class;

class NumberField {
 public:
  /// `min_poly` lists coefficients in ascending degree; it must be monic and
  /// squarefree. `symbol` is the generator name used for printing and parsing.
  explicit NumberField(std::vector<Rational> min_poly, std::string symbol = "z");

  int degree() const noexcept { return degree_; }
  const std::vector<Rational>& min_poly() const noexcept { return min_poly_; }
  const std::string& symbol() const noexcept { return symbol_; }

  /// Power-basis coordinates of x^k for degree <= k <= 2*degree-2.
  const std::vector<Rational>& reduced_power(int k) const { return powers_[k - degree_]; }

  bool same_as(const NumberField& other) const { return min_poly_ == other.min_poly_; }

 private:
  int degree_;
  std::vector<Rational> min_poly_;
  std::string symbol_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Rational> min_poly, std::string symbol = "z");
FieldPtr rational_field();

/// Minimal polynomial of a primitive n-th root of unity, ascending coefficients.
std::vector<Rational> cyclotomic_polynomial(int n);

class FieldElem {
 public:
  FieldElem() : coords_{Rational(0)} {}
  FieldElem(int v) : coords_{Rational(v)} {}
  FieldElem(long v) : coords_{Rational(v)} {}
  FieldElem(const Rational& v) : coords_{v} {}
  FieldElem(FieldPtr field, std::vector<Rational> coords);

  static FieldElem generator(const FieldPtr& field);
  static FieldElem from_rational(const FieldPtr& field, const Rational& v);

  const FieldPtr& field() const noexcept { return field_; }
  /// Coordinates in the power basis; size 1 for a free rational.
  const std::vector<Rational>& raw_coords() const noexcept { return coords_; }
  /// Coordinates padded to `degree` entries.
  std::vector<Rational> coords(int degree) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;

  FieldElem inverse() const;
  FieldElem pow(long e) const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;
  FieldElem operator+() const { return *this; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Polynomial notation in the field's generator, e.g. "1/2 + 3*z^2".
  std::string to_string() const;

 private:
  void adopt_field(const FieldPtr& f);
  void trim();

  FieldPtr field_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// The field shared by a collection of elements (null when all are free rationals).
FieldPtr common_field(const FieldElem& a, const FieldElem& b);

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace hopftwist

namespace Eigen {
template <>
struct NumTraits<hopftwist::FieldElem> : GenericNumTraits<hopftwist::FieldElem> {
  using Real = hopftwist::FieldElem;
  using NonInteger = hopftwist::FieldElem;
  using Literal = hopftwist::FieldElem;
  using Nested = hopftwist::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 100
  };
  static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 10
  };
  static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 5,
    MulCost = 5
  };
  static constexpr int digits10() { return 0; }
};
}  // namespace Eigen

namespace hopftwist {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<FieldElem>;
using Vec = VectorX<FieldElem>;
using QMat = MatrixX<Rational>;
using ZMat = MatrixX<Integer>;

}  // namespace hopftwist
