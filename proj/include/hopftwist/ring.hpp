#pragma once

// Base rings: S-localized orders O[1/S] inside a number field K, plus the
// semilocal variant "localized at P" (every prime outside P inverted), which
// covers rings such as Z_(3).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopftwist/field.hpp"

namespace hopftwist {

class RingSpec {
 public:
  enum class Mode {
    InvertPrimes,  // denominators supported on `primes`
    LocalizeAt,    // denominators coprime to every prime in `primes`
  };

  /// `basis` columns are power-basis coordinates of a Z-basis of an order.
  RingSpec(FieldPtr field, QMat basis, std::vector<long> primes, Mode mode = Mode::InvertPrimes);

  /// Z[x]/(m)[1/S] with the power basis as order basis; m must be integral.
  static RingSpec power_basis(FieldPtr field, std::vector<long> inverted_primes);
  /// Z_(P) inside Q; `local_primes` empty gives Q itself.
  static RingSpec rational_local(std::vector<long> local_primes);
  /// Z[1/S] inside Q.
  static RingSpec rational_inverted(std::vector<long> inverted_primes);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return field_->degree(); }
  const QMat& basis() const noexcept { return basis_; }
  const std::vector<long>& primes() const noexcept { return primes_; }
  Mode mode() const noexcept { return mode_; }
  /// True when every rational is in R (the ring is the field itself).
  bool is_field() const noexcept { return mode_ == Mode::LocalizeAt && primes_.empty() && degree() == 1; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_rational(const Rational& q) const;
  FieldElem from_coords(std::vector<Rational> coords) const;
  FieldElem generator() const;

  /// Named elements usable in expressions (e.g. "sqrt5", "i").
  void set_constant(const std::string& name, const FieldElem& value);
  const std::map<std::string, FieldElem>& constants() const noexcept { return constants_; }

  /// Coordinates of x in the order basis.
  std::vector<Rational> order_coords(const FieldElem& x) const;
  /// The element with the given order-basis coordinates.
  FieldElem from_order_coords(const std::vector<Rational>& c) const;

  bool rational_in_base(const Rational& q) const;
  bool is_rational_unit(const Rational& q) const;

  bool contains(const FieldElem& x) const;
  bool is_unit(const FieldElem& x) const;
  bool same(const RingSpec& other) const;

 private:
  FieldPtr field_;
  QMat basis_;
  QMat basis_inv_;
  std::vector<long> primes_;
  Mode mode_;
  std::map<std::string, FieldElem> constants_;
};

bool membership(const FieldElem& x, const RingSpec& r);
/// Throws ZeroElement for x = 0.
bool is_unit(const FieldElem& x, const RingSpec& r);
/// is_unit(lambda / mu^2); throws ZeroElement for lambda = 0 or mu = 0.
bool is_square_up_to_unit(const FieldElem& lambda, const FieldElem& mu, const RingSpec& r);

template <typename Derived>
bool matrix_in_ring(const Eigen::MatrixBase<Derived>& m, const RingSpec& r) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!r.contains(m(i, j))) return false;
  return true;
}

/// A principal fractional ideal g*R.
class PrincipalIdeal {
 public:
  PrincipalIdeal(FieldElem generator, const RingSpec& ring);
  const FieldElem& generator() const noexcept { return generator_; }
  bool is_integral() const;
  bool is_unit_ideal() const;
  bool operator==(const PrincipalIdeal& other) const;
  PrincipalIdeal inverse() const;
  PrincipalIdeal operator*(const PrincipalIdeal& other) const;

 private:
  FieldElem generator_;
  const RingSpec* ring_;
};

/// Certificate that x is not a square in K: a prime p and a root r of the
/// minimal polynomial mod p at which x reduces to a quadratic non-residue.
struct NonSquareCertificate {
  long prime;
  long root;
  long residue;
};
std::optional<NonSquareCertificate> find_non_square_certificate(const FieldElem& x, long prime_bound = 400);

/// Reduction of x mod the degree-one prime (p, gen - r); nullopt if a
/// denominator is divisible by p.
std::optional<long> reduce_mod_prime(const FieldElem& x, long p, long root);

}  // namespace hopftwist
