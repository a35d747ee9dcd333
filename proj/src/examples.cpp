#include "hopftwist/examples.hpp"

#include <algorithm>
#include <numeric>

#include "hopftwist/lattice.hpp"
#include "hopftwist/parse.hpp"

namespace hopftwist {

// ---------------------------------------------------------------- groups

GroupTable cyclic_table(int n) {
  GroupTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

GroupTable symmetric3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  GroupTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

GroupTable dihedral_table(int n) {
  GroupTable t(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          const int s = ((i + (j ? -k : k)) % n + n) % n;
          t[i + n * j][k + n * l] = s + n * ((j + l) % 2);
        }
  return t;
}

int validate_group_table(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw Error(ErrorKind::BadGroupTable, "empty group table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::BadGroupTable, "group table is not square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(ErrorKind::BadGroupTable, "group table entry out of range");
      if (seen[v]) throw Error(ErrorKind::BadGroupTable, "group table row is not a permutation");
      seen[v] = true;
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error(ErrorKind::BadGroupTable, "group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw Error(ErrorKind::BadGroupTable, "group table is not associative");
  return e;
}

std::vector<int> group_inverses(const GroupTable& t) {
  const int e = validate_group_table(t);
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] == e) inv[a] = b;
  return inv;
}

// ---------------------------------------------------------------- Hopf algebras

HopfAlgebra build_constant(const GroupTable& t, const RingSpec& r) {
  const int e = validate_group_table(t);
  const std::vector<int> inv = group_inverses(t);
  const int n = static_cast<int>(t.size());
  std::vector<Mat> left(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) left[i](i, i) = FieldElem(1L);
  Vec unit = Vec::Constant(n, FieldElem(1L));
  Mat comult = Mat::Zero(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comult(a * n + b, t[a][b]) = FieldElem(1L);
  Vec counit = Vec::Zero(n);
  counit(e) = FieldElem(1L);
  Mat s = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) s(inv[g], g) = FieldElem(1L);
  return HopfAlgebra(FiniteAlgebra(r, std::move(left), std::move(unit)), std::move(comult), std::move(counit),
                     std::move(s));
}

HopfAlgebra build_group_algebra(const GroupTable& t, const RingSpec& r) {
  const int e = validate_group_table(t);
  const std::vector<int> inv = group_inverses(t);
  const int n = static_cast<int>(t.size());
  std::vector<Mat> left(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) left[i](t[i][j], j) = FieldElem(1L);
  Vec unit = Vec::Zero(n);
  unit(e) = FieldElem(1L);
  Mat comult = Mat::Zero(n * n, n);
  for (int g = 0; g < n; ++g) comult(g * n + g, g) = FieldElem(1L);
  Vec counit = Vec::Constant(n, FieldElem(1L));
  Mat s = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) s(inv[g], g) = FieldElem(1L);
  return HopfAlgebra(FiniteAlgebra(r, std::move(left), std::move(unit)), std::move(comult), std::move(counit),
                     std::move(s));
}

HopfAlgebra build_mu_n(int n, const RingSpec& r) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "mu_n needs n >= 1");
  return build_group_algebra(cyclic_table(n), r);
}

HopfAlgebra change_basis(const HopfAlgebra& h, const Mat& p) {
  const int n = h.rank();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "basis change has the wrong shape");
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::DimensionMismatch, "basis change is singular");
  const auto& old = h.algebra().left_matrices();
  std::vector<Mat> left;
  for (int i = 0; i < n; ++i) {
    Mat l = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k)
      if (!p(k, i).is_zero()) l += p(k, i) * old[k];
    left.push_back(sparse_product(*pinv, sparse_product(l, p)));
  }
  Vec unit = *pinv * h.algebra().unit();
  Mat comult = sparse_product(kron(*pinv, *pinv), sparse_product(h.comult(), p));
  Vec counit = p.transpose() * h.counit();
  Mat s = sparse_product(*pinv, sparse_product(h.antipode(), p));
  return HopfAlgebra(FiniteAlgebra(h.ring(), std::move(left), std::move(unit)), std::move(comult), std::move(counit),
                     std::move(s));
}

// ---------------------------------------------------------------- rings

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long pow_mod(long b, long e, long m) {
  long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

RingSpec cyclotomic_ring(int n, std::vector<long> inverted) {
  RingSpec r = RingSpec::power_basis(make_field(cyclotomic_polynomial(n), "z"), std::move(inverted));
  r.set_constant("zeta", r.generator());
  if (n == 4) r.set_constant("i", r.generator());
  if (is_prime(n) && n % 4 == 1) r.set_constant("sqrt" + std::to_string(n), gauss_sum_sqrt(n, r));
  return r;
}

FieldElem gauss_sum_sqrt(int p, const RingSpec& r) {
  if (!is_prime(p) || p % 4 != 1) throw Error(ErrorKind::BadParameter, "Gauss sum square root needs a prime = 1 mod 4");
  const FieldElem z = r.generator();
  FieldElem s(0L);
  for (int k = 1; k < p; ++k) {
    const long l = pow_mod(k, (p - 1) / 2, p);
    s += (l == 1 ? FieldElem(1L) : FieldElem(-1L)) * z.pow(k);
  }
  return s;
}

// ---------------------------------------------------------------- mu_n examples

SymBundle build_v_form(const HopfPtr& mu_n) {
  const int n = mu_n->rank();
  Mat c = Mat::Zero(2 * n, 2);
  c(0 * n + 1 % n, 0) = FieldElem(1L);
  c(1 * n + (n - 1), 1) = FieldElem(1L);
  Mat q = Mat::Zero(2, 2);
  q(0, 1) = q(1, 0) = FieldElem(Rational(1, 2));
  return SymBundle(Comodule(mu_n, c), q);
}

SymBundle build_v_form_corrupted(const HopfPtr& mu_n) {
  const int n = mu_n->rank();
  Mat c = Mat::Zero(2 * n, 2);
  c(0 * n + 1 % n, 0) = FieldElem(1L);
  c(1 * n + 1 % n, 1) = FieldElem(1L);
  Mat q = Mat::Zero(2, 2);
  q(0, 1) = q(1, 0) = FieldElem(Rational(1, 2));
  return SymBundle(Comodule(mu_n, c), q);
}

Mat v_form_diagonalizer(const FieldElem& i) {
  Mat p(2, 2);
  p << FieldElem(1L), i, FieldElem(1L), -i;
  return p;
}

PHS build_kummer_torsor(const HopfPtr& mu_p, const FieldElem& y, bool require_unit) {
  const RingSpec& r = mu_p->ring();
  if (require_unit && (y.is_zero() || !r.is_unit(y))) throw Error(ErrorKind::NotAUnit, "y must be a unit of R");
  const int p = mu_p->rank();
  auto product = [&](int a, int b) {
    Vec v = Vec::Zero(p);
    v((a + b) % p) = (a + b >= p) ? y : FieldElem(1L);
    return v;
  };
  Vec unit = Vec::Zero(p);
  unit(0) = FieldElem(1L);
  FiniteAlgebra alg = FiniteAlgebra::from_products(r, p, product, unit);
  Mat c = Mat::Zero(p * p, p);
  for (int k = 0; k < p; ++k) c(k * p + k, k) = FieldElem(1L);
  return PHS(std::move(alg), Comodule(mu_p, c));
}

PHS build_cyclic_kummer_for_constant(const HopfPtr& map_cn, const FieldElem& zeta, const FieldElem& u) {
  const RingSpec& r = map_cn->ring();
  if (u.is_zero() || !r.is_unit(u)) throw Error(ErrorKind::NotAUnit, "u must be a unit of R");
  const int n = map_cn->rank();
  auto product = [&](int a, int b) {
    Vec v = Vec::Zero(n);
    v((a + b) % n) = (a + b >= n) ? u : FieldElem(1L);
    return v;
  };
  Vec unit = Vec::Zero(n);
  unit(0) = FieldElem(1L);
  FiniteAlgebra alg = FiniteAlgebra::from_products(r, n, product, unit);
  ModuleAction act;
  for (int k = 0; k < n; ++k) {
    Mat m = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = zeta.pow((static_cast<long>(j) * k) % n);
    act.acts.push_back(m);
  }
  return PHS(std::move(alg), from_module(map_cn, act));
}

// ---------------------------------------------------------------- dihedral

RingSpec dihedral_ring() { return cyclotomic_ring(3, {2, 3, 5}); }

DihedralParams default_dihedral_params(const RingSpec& r) {
  DihedralParams p;
  p.n = 3;
  p.chi = 1;
  p.zeta = r.constants().at("zeta");
  p.delta_sq = p.zeta;
  p.alpha0 = FieldElem(0L);
  p.alpha1 = FieldElem(1L);
  return p;
}

namespace {

// p + q delta with delta^2 = d
struct EElem {
  FieldElem p, q;
};

struct EArith {
  FieldElem d;
  EElem mul(const EElem& a, const EElem& b) const { return {a.p * b.p + a.q * b.q * d, a.p * b.q + a.q * b.p}; }
  EElem add(const EElem& a, const EElem& b) const { return {a.p + b.p, a.q + b.q}; }
  EElem tau(const EElem& a) const { return {a.p, -a.q}; }
  EElem inv(const EElem& a) const {
    const FieldElem nrm = a.p * a.p - a.q * a.q * d;
    if (nrm.is_zero()) throw Error(ErrorKind::NotAUnit, "element of E is not invertible");
    return {a.p / nrm, -a.q / nrm};
  }
  EElem pow(EElem a, int e) const {
    EElem r{FieldElem(1L), FieldElem(0L)};
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
};

}  // namespace

DihedralSuite build_dihedral(const RingSpec& r, const DihedralParams& p) {
  const int n = p.n;
  if (n < 3) throw Error(ErrorKind::BadParameter, "dihedral example needs n >= 3");
  if (!p.zeta.pow(n).is_one()) throw Error(ErrorKind::BadParameter, "zeta is not an n-th root of unity");
  for (int k = 1; k < n; ++k)
    if (p.zeta.pow(k).is_one()) throw Error(ErrorKind::BadParameter, "zeta is not primitive");
  const int chi = ((p.chi % n) + n) % n;
  if (chi == 0 || (2 * chi) % n == 0) throw Error(ErrorKind::BadParameter, "chi must have order greater than 2");
  if (!r.is_unit(FieldElem(2L)) || !r.is_unit(FieldElem(static_cast<long>(n))))
    throw Error(ErrorKind::BadParameter, "2 and n must be units of R");
  if (p.delta_sq.is_zero() || !r.is_unit(p.delta_sq)) throw Error(ErrorKind::NotAUnit, "delta^2 must be a unit");

  const EArith e{p.delta_sq};
  const EElem alpha{p.alpha0, p.alpha1};
  const EElem a_e = e.mul(alpha, e.tau(alpha));
  const FieldElem a_unit = a_e.p;
  if (a_unit.is_zero() || !r.is_unit(a_unit)) throw Error(ErrorKind::NotAUnit, "alpha * tau(alpha) must be a unit");
  const EElem alpha_n = e.pow(alpha, n);

  // B = E[x]/(x^n - alpha^n), basis delta^s x^k at k + n * s
  const int dim = 2 * n;
  auto unflatten = [&](const Vec& v) {
    std::vector<EElem> c(n);
    for (int k = 0; k < n; ++k) c[k] = {v(k), v(k + n)};
    return c;
  };
  auto flatten = [&](const std::vector<EElem>& c) {
    Vec v = Vec::Zero(dim);
    for (int k = 0; k < n; ++k) {
      v(k) = c[k].p;
      v(k + n) = c[k].q;
    }
    return v;
  };
  auto poly_mul = [&](const std::vector<EElem>& a, const std::vector<EElem>& b) {
    std::vector<EElem> full(2 * n - 1, EElem{FieldElem(0L), FieldElem(0L)});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) full[i + j] = e.add(full[i + j], e.mul(a[i], b[j]));
    for (int m = 2 * n - 2; m >= n; --m) full[m - n] = e.add(full[m - n], e.mul(full[m], alpha_n));
    full.resize(n);
    return full;
  };
  auto product = [&](int i, int j) {
    Vec a = Vec::Zero(dim), b = Vec::Zero(dim);
    a(i) = FieldElem(1L);
    b(j) = FieldElem(1L);
    return flatten(poly_mul(unflatten(a), unflatten(b)));
  };
  Vec unit = Vec::Zero(dim);
  unit(0) = FieldElem(1L);
  FiniteAlgebra balg = FiniteAlgebra::from_products(r, dim, product, unit);

  Vec x = Vec::Zero(dim);
  x(1) = FieldElem(1L);
  Vec delta = Vec::Zero(dim);
  delta(n) = FieldElem(1L);

  Mat sigma = Mat::Zero(dim, dim);
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < 2; ++s) sigma(k + n * s, k + n * s) = p.zeta.pow((static_cast<long>(chi) * k) % n);

  // tau x = a alpha^{-n} x^{n-1}, tau delta = -delta
  std::vector<EElem> tx(n, EElem{FieldElem(0L), FieldElem(0L)});
  tx[n - 1] = e.mul(EElem{a_unit, FieldElem(0L)}, e.inv(alpha_n));
  const Vec tau_x = flatten(tx);
  Mat tau = Mat::Zero(dim, dim);
  Vec xpow = unit;
  for (int k = 0; k < n; ++k) {
    tau.col(k) = xpow;
    tau.col(k + n) = -balg.multiply(delta, xpow);
    xpow = balg.multiply(xpow, tau_x);
  }

  const GroupTable table = dihedral_table(n);
  auto g = std::make_shared<const HopfAlgebra>(build_group_algebra(table, r));

  Mat hb = Mat::Zero(dim, dim);
  const FieldElem inv_n = FieldElem(Rational(1, n));
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) {
      const FieldElem c = inv_n * p.zeta.pow((static_cast<long>(n) * n - static_cast<long>(j) * m) % n);
      hb(m, j) = c;
      hb(m + n, n + j) = c;
    }
  auto h = std::make_shared<const HopfAlgebra>(change_basis(*g, hb));
  auto a = std::make_shared<const HopfAlgebra>(dual(*h));

  std::vector<Mat> rho(dim);
  {
    Mat sp = Mat::Identity(dim, dim);
    for (int i = 0; i < n; ++i) {
      rho[i] = sp;
      rho[i + n] = sparse_product(sp, tau);
      sp = sparse_product(sp, sigma);
    }
  }
  ModuleAction b_act;
  for (int c = 0; c < dim; ++c) {
    Mat m = Mat::Zero(dim, dim);
    for (int gi = 0; gi < dim; ++gi)
      if (!hb(gi, c).is_zero()) m += hb(gi, c) * rho[gi];
    b_act.acts.push_back(m);
  }
  PHS b(std::move(balg), from_module(a, b_act));

  // M = R e_chi + R e_chibar tau inside H
  const int i0 = chi;
  const int i1 = n + (n - chi) % n;
  ModuleAction m_act;
  for (int c = 0; c < dim; ++c) {
    Mat m = Mat::Zero(2, 2);
    const int idx[2] = {i0, i1};
    for (int col = 0; col < 2; ++col) {
      const Vec prod = h->algebra().multiply(h->algebra().basis_vector(c), h->algebra().basis_vector(idx[col]));
      for (int row = 0; row < dim; ++row) {
        if (prod(row).is_zero()) continue;
        if (row == i0)
          m(0, col) = prod(row);
        else if (row == i1)
          m(1, col) = prod(row);
        else
          throw Error(ErrorKind::BadParameter, "M is not stable under H");
      }
    }
    m_act.acts.push_back(m);
  }
  const std::vector<int> inv = group_inverses(table);
  const Vec tau_g = g->algebra().basis_vector(n);
  auto bar = [&](const Vec& y) {
    Vec out = Vec::Zero(dim);
    for (int gi = 0; gi < dim; ++gi) out(inv[gi]) = y(gi);
    return out;
  };
  Mat q(2, 2);
  const int idx[2] = {i0, i1};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      const Vec xs = hb.col(idx[s]);
      const Vec yt = hb.col(idx[t]);
      const Vec z = g->algebra().multiply(g->algebra().multiply(xs, tau_g), bar(yt));
      q(s, t) = FieldElem(Rational(1, 2)) * g->algebra().regular_trace(z);
    }

  return DihedralSuite{r,
                       p,
                       g,
                       hb,
                       h,
                       a,
                       SymBundle(from_module(a, m_act), q),
                       std::move(b),
                       a_unit,
                       sigma,
                       tau,
                       x,
                       delta};
}

// ---------------------------------------------------------------- reports

void ExampleReport::add(const std::string& check, bool passed, const std::string& detail) {
  checks.push_back(Check{check, passed, detail});
}

bool ExampleReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ExampleReport::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return &c;
  return nullptr;
}

ModPIntegrals fp_group_algebra_integrals(const GroupTable& t, long p) {
  const int e = validate_group_table(t);
  const std::vector<int> inv = group_inverses(t);
  const int n = static_cast<int>(t.size());
  // rows: (g x - x) = 0 for every group element g
  std::vector<std::vector<long>> rows;
  for (int g = 0; g < n; ++g) {
    if (g == e) continue;
    for (int h = 0; h < n; ++h) {
      std::vector<long> row(n, 0);
      for (int k = 0; k < n; ++k)
        if (t[g][k] == h) row[k] = (row[k] + 1) % p;
      row[h] = (row[h] + p - 1) % p;
      rows.push_back(row);
    }
  }
  std::vector<int> pivots;
  int rk = 0;
  for (int c = 0; c < n && rk < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rk; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rk], rows[piv]);
    const long iv = pow_mod(rows[rk][c], p - 2, p);
    for (auto& v : rows[rk]) v = v * iv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rk || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (int k = 0; k < n; ++k) rows[i][k] = ((rows[i][k] - f * rows[rk][k]) % p + p) % p;
    }
    pivots.push_back(c);
    ++rk;
  }
  ModPIntegrals out;
  out.dimension = n - rk;
  if (out.dimension != 1) return out;
  int free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  out.generator.assign(n, 0);
  out.generator[free_col] = 1;
  for (int i = 0; i < rk; ++i) out.generator[pivots[i]] = (p - rows[i][free_col]) % p;
  bool fixes = true;
  for (int g = 0; g < n; ++g) fixes = fixes && out.generator[inv[g]] == out.generator[g];
  out.antipode_fixes = fixes;
  return out;
}

namespace {

Mat diag2(const FieldElem& a, const FieldElem& b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat as_column(const Vec& v) { return Mat(v); }

Vec unit_vector(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = FieldElem(1L);
  return v;
}

// theta pairing checks for one Hopf algebra; returns false on any failure
void add_pairing_checks(ExampleReport& rep, const std::string& tag, const HopfAlgebra& h) {
  const IntegralData d = integrals(h, Side::Left, true);
  const HopfAlgebra dd = dual(h);
  const Vec& th = *d.theta;
  const Vec& td = *d.theta_dual;
  rep.add(tag + ": theta_dual theta = 1_A", matrices_equal(Vec(h.regular_dual_action(td) * th), h.algebra().unit()));
  rep.add(tag + ": theta theta_dual = 1_A^D", matrices_equal(Vec(dd.regular_dual_action(th) * td), dd.algebra().unit()));
  rep.add(tag + ": u -> u theta has unit determinant", has_unit_determinant(theta_map(h, th), h.ring()));
  rep.add(tag + ": eps(theta) eps_D(theta_dual) = n", counit_product_check(h, th, td));
}

void merge(ExampleReport& into, const ExampleReport& from) {
  for (const auto& c : from.checks) into.add(from.name + ": " + c.name, c.passed, c.detail);
  for (const auto& [k, m] : from.matrices) into.matrices[from.name + ": " + k] = m;
}

}  // namespace

ExampleReport verify_axioms() {
  ExampleReport rep{"axioms", {}, {}};
  const RingSpec q = RingSpec::rational_local({});
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"C2", cyclic_table(2)}, {"C5", cyclic_table(5)}, {"S3", symmetric3_table()}};
  for (const auto& [name, t] : groups) {
    const HopfAlgebra mp = build_constant(t, q);
    const HopfAlgebra ga = build_group_algebra(t, q);
    rep.add("Map(" + name + ") axioms", validate_hopf(mp).ok());
    rep.add(name + " group algebra axioms", validate_hopf(ga).ok());
    rep.add("dual of Map(" + name + ") is the group algebra", hopf_equal(dual(mp), ga));
  }
  rep.add("Map(S3) commutative, group algebra not",
          build_constant(symmetric3_table(), q).algebra().is_commutative() &&
              !build_group_algebra(symmetric3_table(), q).algebra().is_commutative());
  for (int n : {2, 3, 5}) rep.add("mu_" + std::to_string(n) + " axioms", validate_hopf(build_mu_n(n, q)).ok());
  const HopfAlgebra mu5 = build_mu_n(5, q);
  rep.add("dual(dual(mu_5)) = mu_5", hopf_equal(dual(dual(mu5)), mu5));
  rep.add("dual(mu_5) is Map(C5)", hopf_equal(dual(mu5), build_constant(cyclic_table(5), q)));

  const DihedralSuite ds = build_dihedral(dihedral_ring(), default_dihedral_params(dihedral_ring()));
  const HopfReport hr = validate_hopf(*ds.h);
  rep.add("dihedral order H axioms", hr.ok(), hr.ok() ? "" : hr.failures.front());
  rep.add("dihedral A = H^D axioms", validate_hopf(*ds.a).ok());

  const int n = 5;
  {
    const HopfAlgebra bad(mu5.algebra(), mu5.comult(), mu5.counit(), Mat::Identity(n, n));
    const HopfReport r = validate_hopf(bad);
    rep.add("corrupted antipode S(t) = t reports antipode", r.has("antipode"));
  }
  {
    Vec eps = Vec::Zero(n);
    eps(0) = FieldElem(1L);
    const HopfAlgebra bad(mu5.algebra(), mu5.comult(), eps, mu5.antipode());
    rep.add("corrupted counit reports counit", validate_hopf(bad).has("counit"));
  }
  {
    Mat c = mu5.comult();
    c(1 * n + 0, 1) = FieldElem(1L);  // Delta(t) = t (x) t + t (x) 1
    const HopfAlgebra bad(mu5.algebra(), c, mu5.counit(), mu5.antipode());
    rep.add("corrupted comultiplication reports coassociativity", validate_hopf(bad).has("coassociativity"));
  }
  {
    bool thrown = false;
    try {
      GroupTable t = cyclic_table(3);
      t[1][1] = 1;
      validate_group_table(t);
    } catch (const Error& e) {
      thrown = e.kind() == ErrorKind::BadGroupTable;
    }
    rep.add("malformed group table rejected", thrown);
  }
  return rep;
}

ExampleReport verify_integrals() {
  ExampleReport rep{"integrals", {}, {}};
  const RingSpec r = RingSpec::rational_inverted({2});
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"C2", cyclic_table(2)}, {"C5", cyclic_table(5)}, {"S3", symmetric3_table()}};
  for (const auto& [name, t] : groups) {
    const int n = static_cast<int>(t.size());
    const int e = validate_group_table(t);
    const HopfAlgebra ga = build_group_algebra(t, r);
    const HopfAlgebra mp = build_constant(t, r);
    const IntegralData dg = integrals(ga, Side::Left, true);
    const IntegralData dm = integrals(mp, Side::Left, true);
    rep.add("I(R[" + name + "]) = R sum(g)",
            lattice_equal(as_column(*dg.theta), as_column(Vec::Constant(n, FieldElem(1L))), r));
    rep.add("I(Map(" + name + ")) = R delta_1", lattice_equal(as_column(*dm.theta), as_column(unit_vector(n, e)), r));
    rep.add("R[" + name + "] unimodular with S = +1 on integrals",
            is_unimodular(ga) && antipode_on_integrals(ga) == 1);
    add_pairing_checks(rep, "R[" + name + "]", ga);
    add_pairing_checks(rep, "Map(" + name + ")", mp);
  }
  for (int p : {2, 3, 5}) {
    const HopfAlgebra mu = build_mu_n(p, r);
    const IntegralData d = integrals(mu, Side::Left, true);
    rep.add("I(mu_" + std::to_string(p) + ") = R(1 + ... + t^" + std::to_string(p - 1) + ")",
            lattice_equal(as_column(*d.theta), as_column(Vec::Constant(p, FieldElem(1L))), r));
    rep.add("mu_" + std::to_string(p) + " satisfies H1", check_H1(mu));
    add_pairing_checks(rep, "mu_" + std::to_string(p), mu);
  }

  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  const int n = ds.params.n;
  {
    const IntegralData dh = integrals(*ds.h, Side::Left, true);
    Vec two_e_d = Vec::Zero(2 * n);
    two_e_d(0) = FieldElem(1L);
    two_e_d(n) = FieldElem(1L);  // 2 e_D = e_phi0 + e_phi0 tau
    rep.add("I(H) = 2R e_D", lattice_equal(as_column(*dh.theta), as_column(two_e_d), dr));
    const IntegralData da = integrals(*ds.a, Side::Left, true);
    Vec n_l0 = Vec::Zero(2 * n);
    for (int j = 0; j < n; ++j) n_l0(j) = FieldElem(1L);  // l0(e_phi) = 1/n, l0(e_phi tau) = 0
    rep.add("I(A) = R n l0", lattice_equal(as_column(*da.theta), as_column(n_l0), dr));
    rep.add("dihedral A satisfies H1", check_H1(*ds.a));
    add_pairing_checks(rep, "H", *ds.h);
    add_pairing_checks(rep, "A", *ds.a);
  }

  for (const auto& [name, t, p] : std::vector<std::tuple<std::string, GroupTable, long>>{
           {"C5", cyclic_table(5), 5}, {"S3", symmetric3_table(), 3}, {"S3", symmetric3_table(), 2}}) {
    const ModPIntegrals mi = fp_group_algebra_integrals(t, p);
    const bool omega = mi.dimension == 1 &&
                       std::all_of(mi.generator.begin(), mi.generator.end(), [](long v) { return v == 1; });
    rep.add("F_" + std::to_string(p) + "[" + name + "]: integrals spanned by sum(g), S fixes them",
            omega && mi.antipode_fixes);
  }
  return rep;
}

ExampleReport verify_unit_form() {
  ExampleReport rep{"unit-form", {}, {}};
  const RingSpec q = RingSpec::rational_local({});
  auto map5 = share(build_constant(cyclic_table(5), q));
  const SymBundle kappa = unit_form(map5);
  rep.matrices["kappa on Q[C5]"] = kappa.gram();
  rep.add("kappa on Q[C5] has orthonormal basis C5", matrices_equal(kappa.gram(), Mat(Mat::Identity(5, 5))));
  rep.add("kappa symmetric", kappa.is_symmetric());
  rep.add("kappa equivariant", is_equivariant(kappa));
  rep.add("kappa unit determinant", kappa.is_nondegenerate());
  const IntegralData d = integrals(*map5, Side::Left, true);
  const FixedForm ff = fixed_form(kappa, *d.theta_dual);
  const Mat on_theta = fixed_form_on(kappa, *d.theta_dual, as_column(*d.theta_dual));
  rep.matrices["kappa^A on theta_dual"] = on_theta;
  rep.add("kappa^A(theta_dual, theta_dual) = 1", matrices_equal(on_theta, Mat(Mat::Identity(1, 1))));
  rep.add("kappa^A has rank 1 and is well defined", ff.gram.rows() == 1 && ff.well_defined);

  const RingSpec r5 = cyclotomic_ring(5, {2, 3});
  auto mu5 = share(build_mu_n(5, r5));
  for (const auto& [name, hp] : std::vector<std::pair<std::string, HopfPtr>>{{"mu_5", mu5}, {"dual(mu_5)", share(dual(*mu5))}}) {
    const SymBundle k = unit_form(hp);
    rep.matrices["kappa for " + name] = k.gram();
    rep.add("kappa for " + name + " symmetric, equivariant, unit determinant",
            k.is_symmetric() && is_equivariant(k) && k.is_nondegenerate());
  }
  {
    const SymBundle k1 = unit_form(share(build_constant({{0}}, q)));
    rep.add("rank-one Hopf algebra gives <1>", matrices_equal(k1.gram(), Mat(Mat::Identity(1, 1))));
  }
  {
    bool thrown = false;
    try {
      unit_form(share(build_group_algebra(symmetric3_table(), q)));
    } catch (const Error& e) {
      thrown = e.kind() == ErrorKind::NotCommutative;
    }
    rep.add("noncommutative A rejected", thrown);
  }
  return rep;
}

ExampleReport verify_v_form() {
  ExampleReport rep{"v-form", {}, {}};
  const RingSpec r5 = cyclotomic_ring(5, {2, 3});
  auto mu5 = share(build_mu_n(5, r5));
  const SymBundle v = build_v_form(mu5);
  rep.matrices["q"] = v.gram();
  rep.add("(V, q) comodule axioms", v.module()->validate().empty());
  rep.add("(V, q) equivariant", is_equivariant(v));
  rep.add("corrupted coaction is not equivariant", !is_equivariant(build_v_form_corrupted(mu5)));
  {
    const Comodule& m = *v.module();
    bool ok = true;
    for (int k = 0; k < 5; ++k) {
      Vec u = unit_vector(5, k);  // u(t^l) = delta_kl
      const Mat act = m.action(u);
      ok = ok && act(0, 0) == (k == 1 ? FieldElem(1L) : FieldElem(0L)) && act(1, 1) == (k == 4 ? FieldElem(1L) : FieldElem(0L)) &&
           act(0, 1).is_zero() && act(1, 0).is_zero();
    }
    rep.add("u e1 = u(t) e1, u e2 = u(t^4) e2", ok);
    rep.add("to_module/from_module round trip",
            matrices_equal(from_module(mu5, to_module(m)).coaction(), m.coaction()));
  }
  {
    const RingSpec ri = cyclotomic_ring(4, {2});
    auto mu5i = share(build_mu_n(5, ri));
    const SymBundle vi = build_v_form(mu5i);
    const Mat p = v_form_diagonalizer(ri.constants().at("i"));
    rep.matrices["diagonalizer"] = p;
    rep.add("over Z[i][1/2], e1 = e1 + e2, e2 = i(e1 - e2) diagonalise q to x^2 + y^2",
            verify_isometry(p, vi.gram(), Mat(Mat::Identity(2, 2)), ri));
  }
  {
    auto mu2 = share(build_mu_n(2, RingSpec::rational_inverted({2})));
    const SymBundle v2 = build_v_form(mu2);
    rep.add("n = 2 V-form comodule axioms and equivariance", v2.module()->validate().empty() && is_equivariant(v2));
  }
  return rep;
}

ExampleReport verify_kummer_twist(int p, const FieldElem& y_in) {
  ExampleReport rep{"kummer-twist", {}, {}};
  const RingSpec r = cyclotomic_ring(p, {2, 3});
  const FieldElem y = y_in.is_rational() ? r.from_rational(y_in.rational_value()) : y_in;
  const FieldElem sq = r.constants().at("sqrt" + std::to_string(p));
  auto mu = share(build_mu_n(p, r));
  const SymBundle v = build_v_form(mu);
  const PHS b = build_kummer_torsor(mu, y);
  const PHSReport pr = is_phs(b);
  rep.add("B_y is a PHS", pr.ok(), pr.ok() ? "" : pr.failures.front());
  const H2Data h2 = check_H2(*mu, sq);
  rep.add("Lambda = eps(I(A)) = pR", PrincipalIdeal(h2.lambda, r) == PrincipalIdeal(FieldElem(static_cast<long>(p)), r));
  rep.add("theta_dual = u0", matrices_equal(h2.theta_dual, unit_vector(p, 0)));

  const SymBundle tb = trace_bundle(b, sq);
  {
    Mat expected = Mat::Zero(p, p);
    expected(0, 0) = FieldElem(1L);
    for (int k = 1; k < p; ++k) expected(k, p - k) = y;
    rep.matrices["trace form on p^{-1/2} B_y"] = tb.gram();
    rep.add("Tr(x^k x^l)/p: 1 at k = l = 0, y at k + l = p", matrices_equal(tb.gram(), expected));
    rep.add("trace bundle equivariant", is_equivariant(tb));
  }

  const TwistResult t = twist(v, b, h2);
  const int m = 2;
  {
    const Mat act = t.module.action(t.theta_dual);
    bool ok = true;
    for (int k = 0; k < p; ++k)
      for (int j = 0; j < 2; ++j) {
        const Vec img = act * unit_vector(p * m, k * m + j);
        Vec expected = Vec::Zero(p * m);
        if (j == 0 && k == p - 1) expected(k * m + j) = FieldElem(1L);
        if (j == 1 && k == 1) expected(k * m + j) = FieldElem(1L);
        ok = ok && matrices_equal(img, expected);
      }
    rep.add("u0(x^k (x) e1) = x^{p-1} (x) e1 for k = p-1, u0(x^k (x) e2) = x (x) e2 for k = 1, else 0", ok);
  }
  Mat named_basis(p * m, 2);
  named_basis.setZero();
  named_basis((p - 1) * m + 0, 0) = FieldElem(1L);
  named_basis(1 * m + 1, 1) = FieldElem(1L);
  rep.add("fixed lattice basis {p^{-1/2} x^{p-1} (x) e1, p^{-1/2} x (x) e2}", lattice_equal(t.basis, named_basis, r));
  const Mat g = t.gram_on(named_basis);
  rep.matrices["twist Gram"] = g;
  Mat expected = Mat::Zero(2, 2);
  expected(0, 1) = expected(1, 0) = y * FieldElem(Rational(1, 2));
  rep.add("twist Gram = [[0, y/2], [y/2, 0]]", matrices_equal(g, expected));
  rep.add("twist form well defined", t.well_defined);
  rep.add("twist Gram has unit determinant", has_unit_determinant(t.gram, r));
  const Mat w = diag2(FieldElem(1L), y.inverse());
  rep.matrices["isometry witness"] = w;
  rep.add("diag(1, 1/y) is an isometry (V, q) -> (V_y, q_y)", verify_isometry(w, g, v.gram(), r));
  {
    bool ok = true;
    try {
      ok = codifferent(b) == PrincipalIdeal(FieldElem(Rational(1, p)), r);
    } catch (const Error&) {
      ok = false;
    }
    rep.add("codifferent of B_y = (1/p) B_y", ok);
  }
  rep.add("I(B (x) A) = B (x) I(A)", scalar_extension_integrals_check(b));
  rep.add("Tr(x) = (lambda theta_dual) x on B_y", trace_is_integral_action(b, h2));
  return rep;
}

namespace {

ExampleReport unit_form_twist_report(const std::string& name, const HopfPtr& a, const PHS& b, const FieldElem& sq) {
  ExampleReport rep{name, {}, {}};
  const PHSReport pr = is_phs(b);
  rep.add("B is a PHS", pr.ok(), pr.ok() ? "" : pr.failures.front());
  const H2Data h2 = check_H2(*a, sq);
  const SymBundle kappa = unit_form(a, h2.theta);
  rep.add("unit form symmetric, equivariant, unit determinant",
          kappa.is_symmetric() && is_equivariant(kappa) && kappa.is_nondegenerate());
  const SymBundle tb = trace_bundle(b, sq);
  const TwistResult t = twist(kappa, b, h2);
  const Mat w = unit_form_twist_isometry(b, t);
  rep.matrices["trace form"] = tb.gram();
  rep.matrices["twist Gram"] = t.gram;
  rep.matrices["witness"] = w;
  rep.add("twist of the unit form is isometric to (D^{-1/2}(B), Tr)", verify_isometry(w, t.gram, tb.gram(), b.ring()));
  rep.add("twist form well defined", t.well_defined);
  return rep;
}

}  // namespace

ExampleReport verify_unit_form_twist_constant() {
  auto a = share(build_constant(cyclic_table(5), RingSpec::rational_local({})));
  return unit_form_twist_report("Map(C5, Q), trivial torsor", a, trivial_torsor(a), FieldElem(1L));
}

ExampleReport verify_unit_form_twist_kummer(const FieldElem& y) {
  const RingSpec r = cyclotomic_ring(5, {2, 3});
  auto a = share(build_mu_n(5, r));
  const FieldElem yy = y.is_rational() ? r.from_rational(y.rational_value()) : y;
  return unit_form_twist_report("mu_5, B_y", a, build_kummer_torsor(a, yy), r.constants().at("sqrt5"));
}

ExampleReport verify_unit_form_twist_cyclic(const FieldElem& u) {
  const RingSpec r = cyclotomic_ring(3, {2, 3});
  auto a = share(build_constant(cyclic_table(3), r));
  const FieldElem uu = u.is_rational() ? r.from_rational(u.rational_value()) : u;
  return unit_form_twist_report("Map(C3, R), R[x]/(x^3 - u)", a,
                                build_cyclic_kummer_for_constant(a, r.constants().at("zeta"), uu), FieldElem(1L));
}

ExampleReport verify_trivial_twists() {
  ExampleReport rep{"trivial-twist", {}, {}};
  struct Case {
    std::string name;
    SymBundle bundle;
    FieldElem sqrt;
  };
  const RingSpec r5 = cyclotomic_ring(5, {2, 3});
  auto mu5 = share(build_mu_n(5, r5));
  auto map5 = share(build_constant(cyclic_table(5), RingSpec::rational_local({})));
  const RingSpec dr = dihedral_ring();
  const DihedralSuite ds = build_dihedral(dr, default_dihedral_params(dr));
  std::vector<Case> cases = {
      {"(V, q) over mu_5", build_v_form(mu5), r5.constants().at("sqrt5")},
      {"unit form of Map(C5, Q)", unit_form(map5), FieldElem(1L)},
      {"unit form of mu_5", unit_form(mu5, check_H2(*mu5, r5.constants().at("sqrt5")).theta), r5.constants().at("sqrt5")},
      {"dihedral (M, q)", ds.bundle, FieldElem(1L)},
  };
  for (const auto& c : cases) {
    const HopfPtr& a = c.bundle.module()->hopf_ptr();
    const H2Data h2 = check_H2(*a, c.sqrt);
    const TwistResult t = twist(c.bundle, trivial_torsor(a), h2);
    const Mat nu = trivial_twist_isometry(c.bundle, t);
    const Mat mu = trivial_twist_inverse(t);
    rep.matrices[c.name + ": nu"] = nu;
    rep.add(c.name + ": nu is an isometry onto the twist", verify_isometry(nu, t.gram, c.bundle.gram(), a->ring()));
    rep.add(c.name + ": mu nu = id",
            matrices_equal(sparse_product(mu, sparse_product(t.basis, nu)), Mat(Mat::Identity(c.bundle.rank(), c.bundle.rank()))));
    rep.add(c.name + ": twist rank equals rank of M", t.gram.rows() == c.bundle.rank());
  }
  return rep;
}

ExampleReport verify_dihedral(const RingSpec& r, const DihedralParams& p) {
  ExampleReport rep{"dihedral", {}, {}};
  const DihedralSuite ds = build_dihedral(r, p);
  const int n = p.n;
  const HopfReport hr = validate_hopf(*ds.h);
  rep.add("H is a Hopf order", hr.ok(), hr.ok() ? "" : hr.failures.front());
  rep.add("A = H^D is a Hopf order", validate_hopf(*ds.a).ok());
  rep.add("A is commutative, H is not", ds.a->algebra().is_commutative() && !ds.h->algebra().is_commutative());
  rep.add("eps(theta_H) eps_D(theta_H^D) = 2n", counit_product_check(*ds.h));
  const SymBundle& m = ds.bundle;
  rep.matrices["q on (e_chi, e_chibar tau)"] = m.gram();
  Mat hyper = Mat::Zero(2, 2);
  hyper(0, 1) = hyper(1, 0) = FieldElem(1L);
  rep.add("q(e_chi, e_chibar tau) = 1, q(e_chi, e_chi) = 0 = q(e_chibar tau, e_chibar tau)", matrices_equal(m.gram(), hyper));
  rep.add("(M, q) comodule axioms", m.module()->validate().empty());
  rep.add("(M, q) equivariant", is_equivariant(m));
  rep.add("discriminant of q is -1", discriminant(m) == FieldElem(-1L));
  const PHSReport pr = is_phs(ds.b);
  rep.add("B is a PHS for A", pr.ok(), pr.ok() ? "" : pr.failures.front());
  {
    Mat diff = ds.sigma_on_b;
    for (int i = 0; i < 2 * n; ++i) diff(i, i) -= FieldElem(1L);
    rep.add("E = B^<sigma> has rank 2", kernel(diff).cols() == 2);
  }
  return rep;
}

ExampleReport verify_dihedral_twist(const RingSpec& r, const DihedralParams& p) {
  ExampleReport rep{"dihedral-twist", {}, {}};
  const DihedralSuite ds = build_dihedral(r, p);
  const int n = p.n;
  const FieldElem a = ds.a_unit;
  const FieldElem d2 = p.delta_sq;
  const H2Data h2 = check_H2(*ds.a, FieldElem(1L));
  rep.add("Lambda = nR is the unit ideal", PrincipalIdeal(h2.lambda, r).is_unit_ideal());
  const TwistResult t = twist(ds.bundle, ds.b, h2);

  const Vec x_tau = ds.tau_on_b * ds.x;
  const Vec dx_tau = ds.b.algebra().multiply(ds.delta, x_tau);
  const Vec dx = ds.b.algebra().multiply(ds.delta, ds.x);
  const Vec e0 = unit_vector(2, 0), e1 = unit_vector(2, 1);
  Mat eps(4 * n, 2);
  eps.col(0) = kron(x_tau, e0) + kron(ds.x, e1);
  eps.col(1) = kron(dx_tau, e0) - kron(dx, e1);
  rep.matrices["epsilon basis"] = eps;
  rep.add("fixed lattice = R eps1 + R eps2", lattice_equal(t.basis, eps, r));
  const Mat g = t.gram_on(eps);
  rep.matrices["twist Gram on (eps1, eps2)"] = g;
  rep.add("twist Gram = diag(2a, -2a delta^2)",
          matrices_equal(g, diag2(FieldElem(2L) * a, FieldElem(-2L) * a * d2)));
  rep.add("twist form well defined", t.well_defined);
  {
    const Mat restricted = sparse_product(Mat(eps.transpose()), sparse_product(t.module_gram, eps));
    const FieldElem scale = ds.a->algebra().unit().dot(t.theta_dual);  // eps_D(theta_dual)
    rep.matrices["Tr (x) q on (eps1, eps2)"] = restricted;
    rep.add("Tr (x) q = eps_D(theta_dual) q~ on fixed vectors", matrices_equal(restricted, Mat(scale * g)));
    rep.add("eps_D(theta_dual) = 2n", scale == FieldElem(static_cast<long>(2 * n)));
  }
  const FieldElem det = determinant(g);
  rep.add("discriminant -delta^2 up to squares", same_square_class(det, -d2, FieldElem(2L) * a));
  {
    bool ok = true;
    try {
      ok = codifferent(ds.b).is_unit_ideal();
    } catch (const Error&) {
      ok = false;
    }
    rep.add("codifferent of B = Lambda^{-1} B = B (dual lattice agrees)", ok);
  }
  rep.add("I(B (x) A) = B (x) I(A)", scalar_extension_integrals_check(ds.b));
  rep.add("Tr(x) = (lambda theta_dual) x on B", trace_is_integral_action(ds.b, h2));
  return rep;
}

// ---------------------------------------------------------------- runner

std::vector<std::string> example_names() {
  return {"axioms",       "integrals",     "unit-form", "v-form",        "unit-form-twist",
          "kummer-twist", "trivial-twist", "dihedral",  "dihedral-twist"};
}

namespace {

std::string param(const std::map<std::string, std::string>& params, const std::string& key, const std::string& def) {
  auto it = params.find(key);
  return it == params.end() ? def : it->second;
}

DihedralParams dihedral_from(const RingSpec& r, const std::map<std::string, std::string>& params) {
  DihedralParams p = default_dihedral_params(r);
  if (params.count("chi")) p.chi = std::stoi(params.at("chi"));
  if (params.count("delta_sq")) p.delta_sq = parse_element(params.at("delta_sq"), r);
  if (params.count("alpha0")) p.alpha0 = parse_element(params.at("alpha0"), r);
  if (params.count("alpha1")) p.alpha1 = parse_element(params.at("alpha1"), r);
  return p;
}

}  // namespace

ExampleReport run_example(const std::string& name, const std::map<std::string, std::string>& params) {
  if (name == "axioms") return verify_axioms();
  if (name == "integrals") return verify_integrals();
  if (name == "unit-form") return verify_unit_form();
  if (name == "v-form") return verify_v_form();
  if (name == "trivial-twist") return verify_trivial_twists();
  if (name == "kummer-twist") {
    const int p = std::stoi(param(params, "p", "5"));
    const RingSpec r = cyclotomic_ring(p, {2, 3});
    return verify_kummer_twist(p, parse_element(param(params, "y", "2"), r));
  }
  if (name == "unit-form-twist") {
    ExampleReport rep{"unit-form-twist", {}, {}};
    const RingSpec r5 = cyclotomic_ring(5, {2, 3});
    const RingSpec r3 = cyclotomic_ring(3, {2, 3});
    merge(rep, verify_unit_form_twist_constant());
    merge(rep, verify_unit_form_twist_kummer(parse_element(param(params, "y", "2"), r5)));
    merge(rep, verify_unit_form_twist_cyclic(parse_element(param(params, "u", "2"), r3)));
    return rep;
  }
  if (name == "dihedral" || name == "dihedral-twist") {
    const RingSpec r = dihedral_ring();
    const DihedralParams p = dihedral_from(r, params);
    return name == "dihedral" ? verify_dihedral(r, p) : verify_dihedral_twist(r, p);
  }
  throw Error(ErrorKind::BadParameter, "unknown example '" + name + "'");
}

}  // namespace hopftwist
