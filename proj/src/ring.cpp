#include "hopftwist/ring.hpp"

#include <algorithm>

#include "hopftwist/linalg.hpp"

namespace hopftwist {

namespace {

Integer strip_primes(Integer d, const std::vector<long>& primes) {
  for (long p : primes) {
    const Integer pp(p);
    while (d % pp == 0) d /= pp;
  }
  return d;
}

}  // namespace

RingSpec::RingSpec(FieldPtr field, QMat basis, std::vector<long> primes, Mode mode)
    : field_(std::move(field)), basis_(std::move(basis)), primes_(std::move(primes)), mode_(mode) {
  const int d = field_->degree();
  if (basis_.rows() != d || basis_.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "integral basis must be degree x degree");
  auto inv = inverse(basis_);
  if (!inv) throw Error(ErrorKind::BadRing, "integral basis is singular");
  basis_inv_ = *inv;
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (long p : primes_)
    if (p < 2) throw Error(ErrorKind::BadRing, "primes must be at least 2");
  if (!is_rational_unit(Rational(2))) throw Error(ErrorKind::BadRing, "2 must be invertible in the base ring");
  if (!contains(one())) throw Error(ErrorKind::BadRing, "1 is not in the order");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> ci(d), cj(d);
      for (int k = 0; k < d; ++k) {
        ci[k] = basis_(k, i);
        cj[k] = basis_(k, j);
      }
      if (!contains(FieldElem(field_, ci) * FieldElem(field_, cj)))
        throw Error(ErrorKind::BadRing, "order basis is not closed under multiplication");
    }
}

RingSpec RingSpec::power_basis(FieldPtr field, std::vector<long> inverted_primes) {
  const int d = field->degree();
  return RingSpec(field, QMat::Identity(d, d), std::move(inverted_primes), Mode::InvertPrimes);
}

RingSpec RingSpec::rational_local(std::vector<long> local_primes) {
  return RingSpec(rational_field(), QMat::Identity(1, 1), std::move(local_primes), Mode::LocalizeAt);
}

RingSpec RingSpec::rational_inverted(std::vector<long> inverted_primes) {
  return RingSpec(rational_field(), QMat::Identity(1, 1), std::move(inverted_primes), Mode::InvertPrimes);
}

FieldElem RingSpec::zero() const { return FieldElem::from_rational(field_, 0); }
FieldElem RingSpec::one() const { return FieldElem::from_rational(field_, 1); }
FieldElem RingSpec::from_rational(const Rational& q) const { return FieldElem::from_rational(field_, q); }
FieldElem RingSpec::from_coords(std::vector<Rational> coords) const { return FieldElem(field_, std::move(coords)); }
FieldElem RingSpec::generator() const { return FieldElem::generator(field_); }

void RingSpec::set_constant(const std::string& name, const FieldElem& value) {
  FieldElem v = value + zero();
  constants_[name] = v;
}

std::vector<Rational> RingSpec::order_coords(const FieldElem& x) const {
  const int d = degree();
  const std::vector<Rational> c = x.coords(d);
  std::vector<Rational> out(d, Rational(0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (sgn(c[k]) != 0) out[i] += basis_inv_(i, k) * c[k];
  return out;
}

FieldElem RingSpec::from_order_coords(const std::vector<Rational>& c) const {
  const int d = degree();
  std::vector<Rational> out(d, Rational(0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) out[i] += basis_(i, k) * c[k];
  return FieldElem(field_, std::move(out));
}

bool RingSpec::rational_in_base(const Rational& q) const {
  if (sgn(q) == 0) return true;
  const Integer den = q.get_den();
  if (mode_ == Mode::InvertPrimes) return strip_primes(den, primes_) == 1;
  for (long p : primes_)
    if (den % Integer(p) == 0) return false;
  return true;
}

bool RingSpec::is_rational_unit(const Rational& q) const {
  if (sgn(q) == 0) return false;
  return rational_in_base(q) && rational_in_base(1 / q);
}

bool RingSpec::contains(const FieldElem& x) const {
  if (x.field() && !x.field()->same_as(*field_)) throw Error(ErrorKind::FieldMismatch, "element from another field");
  for (const auto& c : order_coords(x))
    if (!rational_in_base(c)) return false;
  return true;
}

bool RingSpec::is_unit(const FieldElem& x) const {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "is_unit of zero");
  return contains(x) && contains(x.inverse());
}

bool RingSpec::same(const RingSpec& other) const {
  return field_->same_as(*other.field_) && matrices_equal(basis_, other.basis_) && primes_ == other.primes_ &&
         mode_ == other.mode_;
}

bool membership(const FieldElem& x, const RingSpec& r) { return r.contains(x); }

bool is_unit(const FieldElem& x, const RingSpec& r) { return r.is_unit(x); }

bool is_square_up_to_unit(const FieldElem& lambda, const FieldElem& mu, const RingSpec& r) {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroElement, "lambda is zero");
  if (mu.is_zero()) throw Error(ErrorKind::ZeroElement, "square-root witness is zero");
  return r.is_unit(lambda / (mu * mu));
}

PrincipalIdeal::PrincipalIdeal(FieldElem generator, const RingSpec& ring)
    : generator_(std::move(generator)), ring_(&ring) {
  if (generator_.is_zero()) throw Error(ErrorKind::ZeroElement, "ideal generator is zero");
}

bool PrincipalIdeal::is_integral() const { return ring_->contains(generator_); }
bool PrincipalIdeal::is_unit_ideal() const { return ring_->is_unit(generator_); }
bool PrincipalIdeal::operator==(const PrincipalIdeal& other) const {
  return ring_->is_unit(generator_ / other.generator_);
}
PrincipalIdeal PrincipalIdeal::inverse() const { return PrincipalIdeal(generator_.inverse(), *ring_); }
PrincipalIdeal PrincipalIdeal::operator*(const PrincipalIdeal& other) const {
  return PrincipalIdeal(generator_ * other.generator_, *ring_);
}

namespace {

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % p);
    b = static_cast<long>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<long> rational_mod(const Rational& q, long p) {
  const Integer pp(p);
  Integer den = q.get_den();
  if (den % pp == 0) return std::nullopt;
  Integer num = q.get_num() % pp;
  Integer dm = den % pp;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pp.get_mpz_t());
  Integer v = (num * inv) % pp;
  if (v < 0) v += pp;
  return v.get_si();
}

}  // namespace

std::optional<long> reduce_mod_prime(const FieldElem& x, long p, long root) {
  long acc = 0;
  long power = 1;
  for (const auto& c : x.raw_coords()) {
    auto r = rational_mod(c, p);
    if (!r) return std::nullopt;
    acc = static_cast<long>((acc + static_cast<__int128>(*r) * power) % p);
    power = static_cast<long>((static_cast<__int128>(power) * root) % p);
  }
  return acc;
}

std::optional<NonSquareCertificate> find_non_square_certificate(const FieldElem& x, long prime_bound) {
  if (x.is_zero()) return std::nullopt;
  const FieldPtr f = x.field() ? x.field() : rational_field();
  for (long p = 3; p <= prime_bound; p += 2) {
    if (!is_small_prime(p)) continue;
    for (long r = 0; r < p; ++r) {
      // r must be a root of the minimal polynomial mod p
      long acc = 0;
      bool ok = true;
      for (std::size_t i = f->min_poly().size(); i-- > 0;) {
        auto c = rational_mod(f->min_poly()[i], p);
        if (!c) {
          ok = false;
          break;
        }
        acc = static_cast<long>((static_cast<__int128>(acc) * r + *c) % p);
      }
      if (!ok) break;
      if (acc != 0) continue;
      // simple root, so (p, gen - r) is a degree-one prime with gen -> r
      long der = 0;
      for (std::size_t i = f->min_poly().size(); i-- > 1;) {
        auto c = rational_mod(f->min_poly()[i] * static_cast<long>(i), p);
        der = static_cast<long>((static_cast<__int128>(der) * r + *c) % p);
      }
      if (der == 0) continue;
      auto v = reduce_mod_prime(x, p, r);
      if (!v || *v == 0) continue;
      if (mod_pow(*v, (p - 1) / 2, p) == p - 1) return NonSquareCertificate{p, r, *v};
    }
  }
  return std::nullopt;
}

}  // namespace hopftwist
