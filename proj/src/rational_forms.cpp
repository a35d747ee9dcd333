#include "hopftwist/rational_forms.hpp"

#include <algorithm>
#include <set>

#include "hopftwist/linalg.hpp"

namespace hopftwist {

Diagonalization diagonalize(const QMat& gram) {
  const Eigen::Index n = gram.rows();
  if (gram.cols() != n) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  QMat g = gram;
  QMat p = QMat::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sgn(g(i, i)) == 0) {
      Eigen::Index j = i + 1;
      while (j < n && sgn(g(j, j)) == 0) ++j;
      if (j < n) {
        g.row(i).swap(g.row(j));
        g.col(i).swap(g.col(j));
        p.col(i).swap(p.col(j));
      } else {
        j = i + 1;
        while (j < n && sgn(g(i, j)) == 0) ++j;
        if (j == n) continue;  // row i is zero
        // e_i <- e_i + e_j gives q(e_i, e_i) = 2 q(e_i, e_j) != 0
        g.col(i) += g.col(j);
        g.row(i) += g.row(j);
        p.col(i) += p.col(j);
      }
    }
    const Rational piv = g(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (sgn(g(i, j)) == 0) continue;
      const Rational f = g(i, j) / piv;
      g.col(j) -= f * g.col(i);
      g.row(j) -= f * g.row(i);
      p.col(j) -= f * p.col(i);
    }
  }
  Diagonalization d;
  for (Eigen::Index i = 0; i < n; ++i) d.diagonal.push_back(g(i, i));
  d.change = p;
  return d;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n <= 1) return;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    while (n % p == 0) {
      out.push_back(Integer(p));
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

// q = p^v * u with u a p-unit rational.
int valuation(const Rational& q, const Integer& p, Rational& unit) {
  Integer num = q.get_num(), den = q.get_den();
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  unit = Rational(num, den);
  unit.canonicalize();
  return v;
}

// Legendre symbol of a p-unit rational.
int unit_legendre(const Rational& u, const Integer& p) {
  return legendre(u.get_num(), p) * legendre(u.get_den(), p);
}

// u mod 8 for a 2-adic unit rational (odd numerator and denominator).
int mod8(const Rational& u) {
  Integer num = u.get_num() % 8, den = u.get_den() % 8;
  if (num < 0) num += 8;
  if (den < 0) den += 8;
  // odd residues are self-inverse mod 8
  Integer r = (num * den) % 8;
  return static_cast<int>(r.get_si());
}

}  // namespace

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> f;
  factor_into(abs(n), f);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Integer squarefree_part(const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorKind::SingularForm, "zero has no square class");
  // q ~ num * den mod squares
  Integer n = q.get_num() * q.get_den();
  std::vector<Integer> f;
  factor_into(abs(n), f);
  Integer out = sgn(n) < 0 ? -1 : 1;
  std::map<Integer, int> count;
  for (const auto& p : f) ++count[p];
  for (const auto& [p, c] : count)
    if (c % 2 == 1) out *= p;
  return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error(ErrorKind::SingularForm, "Hilbert symbol of zero");
  if (p == 0) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  Rational u, v;
  const int alpha = valuation(a, p, u);
  const int beta = valuation(b, p, v);
  if (p == 2) {
    const int um = mod8(u), vm = mod8(v);
    const int eps_u = ((um - 1) / 2) % 2, eps_v = ((vm - 1) / 2) % 2;
    const int om_u = ((um * um - 1) / 8) % 2, om_v = ((vm * vm - 1) / 8) % 2;
    const int e = eps_u * eps_v + (alpha & 1) * om_v + (beta & 1) * om_u;
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  const Integer half = (p - 1) / 2;
  if ((alpha & 1) && (beta & 1) && (half % 2 == 1)) s = -s;
  if (beta & 1) s *= unit_legendre(u, p);
  if (alpha & 1) s *= unit_legendre(v, p);
  return s;
}

int FormInvariants::hasse_at(const Integer& p) const {
  if (p == 0) return hasse_real;
  auto it = hasse.find(p);
  return it == hasse.end() ? 1 : it->second;
}

bool FormInvariants::product_formula() const {
  int prod = hasse_real;
  for (const auto& [p, s] : hasse) prod *= s;
  return prod == 1;
}

FormInvariants rational_invariants(const QMat& gram) {
  const Diagonalization d = diagonalize(gram);
  FormInvariants inv;
  inv.rank = static_cast<int>(d.diagonal.size());
  Rational det = 1;
  std::set<Integer> primes{Integer(2)};
  for (const auto& a : d.diagonal) {
    if (sgn(a) == 0) throw Error(ErrorKind::SingularForm, "form is degenerate");
    det *= a;
    if (sgn(a) > 0)
      ++inv.positive;
    else
      ++inv.negative;
    for (const auto& p : prime_factors(a.get_num())) primes.insert(p);
    for (const auto& p : prime_factors(a.get_den())) primes.insert(p);
  }
  inv.det_class = squarefree_part(det);
  auto hasse_of = [&](const Integer& p) {
    int s = 1;
    for (std::size_t i = 0; i < d.diagonal.size(); ++i)
      for (std::size_t j = i + 1; j < d.diagonal.size(); ++j) s *= hilbert_symbol(d.diagonal[i], d.diagonal[j], p);
    return s;
  };
  for (const auto& p : primes) inv.hasse[p] = hasse_of(p);
  inv.hasse_real = hasse_of(Integer(0));
  return inv;
}

bool decide_isometry_Q(const QMat& g1, const QMat& g2) {
  const FormInvariants a = rational_invariants(g1);
  const FormInvariants b = rational_invariants(g2);
  if (a.rank != b.rank || a.det_class != b.det_class || a.positive != b.positive || a.negative != b.negative)
    return false;
  std::set<Integer> primes;
  for (const auto& [p, s] : a.hasse) primes.insert(p);
  for (const auto& [p, s] : b.hasse) primes.insert(p);
  for (const auto& p : primes)
    if (a.hasse_at(p) != b.hasse_at(p)) return false;
  return a.hasse_real == b.hasse_real;
}

}  // namespace hopftwist
