#include "hopftwist/field.hpp"

#include <sstream>

namespace hopftwist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::BadRing: return "BadRing";
    case ErrorKind::KernelRankError: return "KernelRankError";
    case ErrorKind::NoFreeGenerator: return "NoFreeGenerator";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::LatticeNotFree: return "LatticeNotFree";
    case ErrorKind::H1Failure: return "H1Failure";
    case ErrorKind::H2Failure: return "H2Failure";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::FreenessUncertified: return "FreenessUncertified";
    case ErrorKind::DualLatticeMismatch: return "DualLatticeMismatch";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::BadGroupTable: return "BadGroupTable";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

int poly_deg(const Poly& p) { return poly_is_zero(p) ? -1 : static_cast<int>(p.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// Division with remainder over Q.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  const int db = poly_deg(b);
  q.assign(std::max(1, poly_deg(a) - db + 1), Rational(0));
  while (poly_deg(r) >= db && !poly_is_zero(r)) {
    const int shift = poly_deg(r) - db;
    const Rational c = r.back() / b.back();
    q[shift] += c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    poly_trim(r);
  }
  poly_trim(q);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{0};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  poly_trim(d);
  return d;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!poly_is_zero(b)) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

NumberField::NumberField(std::vector<Rational> min_poly, std::string symbol)
    : min_poly_(std::move(min_poly)), symbol_(std::move(symbol)) {
  poly_trim(min_poly_);
  degree_ = poly_deg(min_poly_);
  if (degree_ < 1) throw Error(ErrorKind::BadRing, "minimal polynomial must have positive degree");
  if (min_poly_.back() != 1) throw Error(ErrorKind::NotMonic, "minimal polynomial must be monic");
  if (poly_deg(poly_gcd(min_poly_, poly_derivative(min_poly_))) > 0)
    throw Error(ErrorKind::NotSquarefree, "minimal polynomial must be squarefree");
  // x^d = -sum_{i<d} m_i x^i, then shift repeatedly.
  std::vector<Rational> cur(degree_);
  for (int i = 0; i < degree_; ++i) cur[i] = -min_poly_[i];
  for (int k = degree_; k <= 2 * degree_ - 2; ++k) {
    powers_.push_back(cur);
    std::vector<Rational> next(degree_, Rational(0));
    const Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] -= top * min_poly_[i];
    cur = std::move(next);
  }
}

FieldPtr make_field(std::vector<Rational> min_poly, std::string symbol) {
  return std::make_shared<const NumberField>(std::move(min_poly), std::move(symbol));
}

FieldPtr rational_field() {
  static const FieldPtr q = make_field({Rational(0), Rational(1)}, "x");
  return q;
}

std::vector<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "cyclotomic index must be positive");
  // x^n - 1 = prod_{d | n} Phi_d(x)
  Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q, r;
    poly_divmod(p, cyclotomic_polynomial(d), q, r);
    p = q;
  }
  return p;
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) {
    if (coords_.size() != 1) throw Error(ErrorKind::DimensionMismatch, "free rational needs one coordinate");
    return;
  }
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > d) throw Error(ErrorKind::DimensionMismatch, "too many coordinates for field degree");
  coords_.resize(d, Rational(0));
}

FieldElem FieldElem::generator(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() == 1)
    c[0] = -field->min_poly()[0];
  else
    c[1] = 1;
  return FieldElem(field, std::move(c));
}

FieldElem FieldElem::from_rational(const FieldPtr& field, const Rational& v) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = v;
  return FieldElem(field, std::move(c));
}

std::vector<Rational> FieldElem::coords(int degree) const {
  std::vector<Rational> c = coords_;
  c.resize(degree, Rational(0));
  return c;
}

bool FieldElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElem::is_one() const { return is_rational() && coords_[0] == 1; }

Rational FieldElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::BadParameter, "element is not rational: " + to_string());
  return coords_[0];
}

void FieldElem::adopt_field(const FieldPtr& f) {
  if (!f || field_ == f) return;
  if (field_) {
    if (!field_->same_as(*f)) throw Error(ErrorKind::FieldMismatch, "elements live in different number fields");
    return;
  }
  field_ = f;
  coords_.resize(f->degree(), Rational(0));
}

FieldPtr common_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() && b.field() && !a.field()->same_as(*b.field()))
    throw Error(ErrorKind::FieldMismatch, "elements live in different number fields");
  return a.field() ? a.field() : b.field();
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  adopt_field(o.field_);
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  adopt_field(o.field_);
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  adopt_field(o.field_);
  if (o.coords_.size() == 1 || o.is_rational()) {
    const Rational s = o.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coords_[0];
    coords_ = o.coords_;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  const int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = field_->reduced_power(k);
    for (int i = 0; i < d; ++i) prod[i] += prod[k] * red[i];
  }
  prod.resize(d);
  coords_ = std::move(prod);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  if (is_rational()) {
    FieldElem r = *this;
    for (auto& c : r.coords_) c = 0;
    r.coords_[0] = 1 / coords_[0];
    return r;
  }
  // Extended Euclid: find s with s*a = 1 mod m.
  Poly a = coords_;
  poly_trim(a);
  Poly m = field_->min_poly();
  Poly r0 = m, r1 = a, s0{0}, s1{1};
  while (!poly_is_zero(r1)) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because m is squarefree and a is a unit mod m
  // only when gcd(a, m) = 1; a zero divisor yields a positive-degree gcd.
  if (poly_deg(r0) != 0) throw Error(ErrorKind::ZeroElement, "element is a zero divisor in Q[x]/(m)");
  Poly q, rem;
  poly_divmod(s0, m, q, rem);
  const Rational c = r0[0];
  std::vector<Rational> out(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return FieldElem(field_, std::move(out));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = field_ ? from_rational(field_, 1) : FieldElem(1);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  common_field(a, b);
  const std::size_t n = std::max(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ca = i < a.coords_.size() ? a.coords_[i] : Rational(0);
    const Rational cb = i < b.coords_.size() ? b.coords_[i] : Rational(0);
    if (ca != cb) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string FieldElem::to_string() const {
  const std::string sym = field_ ? field_->symbol() : "x";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << "*";
    os << sym;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

}  // namespace hopftwist
