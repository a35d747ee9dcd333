#include "hopftwist/comodule.hpp"

#include <random>

namespace hopftwist {

Mat ModuleAction::of(const Vec& g) const {
  const int m = rank();
  Mat out = Mat::Zero(m, m);
  for (std::size_t k = 0; k < acts.size(); ++k) {
    if (g(k).is_zero()) continue;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!acts[k](i, j).is_zero()) out(i, j) += g(k) * acts[k](i, j);
  }
  return out;
}

Comodule::Comodule(HopfPtr hopf, Mat coaction) : hopf_(std::move(hopf)), coaction_(std::move(coaction)) {
  m_ = static_cast<int>(coaction_.cols());
  if (coaction_.rows() != static_cast<Eigen::Index>(m_) * hopf_->rank())
    throw Error(ErrorKind::DimensionMismatch, "coaction must be (m*n) x m");
}

Mat Comodule::action(int k) const {
  const int n = hopf_->rank();
  Mat a(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) a(j, i) = coaction_(j * n + k, i);
  return a;
}

Mat Comodule::action(const Vec& g) const {
  const int n = hopf_->rank();
  Mat a = Mat::Zero(m_, m_);
  for (int k = 0; k < n; ++k) {
    if (g(k).is_zero()) continue;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (!coaction_(j * n + k, i).is_zero()) a(j, i) += g(k) * coaction_(j * n + k, i);
  }
  return a;
}

std::vector<std::string> Comodule::validate() const {
  std::vector<std::string> failures;
  const int n = hopf_->rank();
  const Mat& d = hopf_->comult();
  bool coassoc = true;
  for (int i = 0; i < m_ && coassoc; ++i) {
    Vec lhs = Vec::Zero(m_ * n * n), rhs = Vec::Zero(m_ * n * n);
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < n; ++k) {
        const FieldElem& c = coaction_(j * n + k, i);
        if (c.is_zero()) continue;
        for (int ab = 0; ab < m_ * n; ++ab)
          if (!coaction_(ab, j).is_zero()) lhs(ab * n + k) += c * coaction_(ab, j);
        for (int bc = 0; bc < n * n; ++bc)
          if (!d(bc, k).is_zero()) rhs(j * n * n + bc) += c * d(bc, k);
      }
    coassoc = matrices_equal(lhs, rhs);
  }
  if (!coassoc) failures.push_back("coassociativity");
  bool counit = true;
  for (int i = 0; i < m_ && counit; ++i)
    for (int j = 0; j < m_ && counit; ++j) {
      FieldElem s = 0;
      for (int k = 0; k < n; ++k)
        if (!coaction_(j * n + k, i).is_zero()) s += hopf_->counit()(k) * coaction_(j * n + k, i);
      counit = s == FieldElem(i == j ? 1 : 0);
    }
  if (!counit) failures.push_back("counit");
  if (!matrix_in_ring(coaction_, ring())) failures.push_back("integrality");
  return failures;
}

ModuleAction to_module(const Comodule& m) {
  ModuleAction act;
  for (int k = 0; k < m.hopf().rank(); ++k) act.acts.push_back(m.action(k));
  return act;
}

Comodule from_module(HopfPtr hopf, const ModuleAction& act) {
  const int n = hopf->rank();
  if (static_cast<int>(act.acts.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "need one action matrix per dual basis element");
  const int m = act.rank();
  Mat coaction = Mat::Zero(m * n, m);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) coaction(j * n + k, i) = act.acts[k](j, i);
  return Comodule(std::move(hopf), std::move(coaction));
}

bool is_module_action(const HopfAlgebra& h, const ModuleAction& act) {
  const int n = h.rank();
  const int m = act.rank();
  // psi(f_a) psi(f_b) = psi(f_a f_b), with f_a f_b = sum_i Delta_i^{ab} f_i
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec prod = Vec::Zero(n);
      for (int i = 0; i < n; ++i) prod(i) = h.comult()(a * n + b, i);
      if (!matrices_equal(sparse_product(act.acts[a], act.acts[b]), act.of(prod))) return false;
    }
  // unit of A^D is eps
  return matrices_equal(act.of(h.counit()), Mat(Mat::Identity(m, m)));
}

Comodule trivial_comodule(HopfPtr hopf, int m) {
  const int n = hopf->rank();
  Mat coaction = Mat::Zero(m * n, m);
  const Vec& one = hopf->algebra().unit();
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) coaction(i * n + k, i) = one(k);
  return Comodule(std::move(hopf), std::move(coaction));
}

Comodule regular_comodule(HopfPtr hopf) {
  Mat c = hopf->comult();
  return Comodule(std::move(hopf), std::move(c));
}

Comodule dual_regular_comodule(HopfPtr hopf) {
  const HopfAlgebra d = dual(*hopf);
  ModuleAction act;
  act.acts = d.algebra().left_matrices();
  return from_module(std::move(hopf), act);
}

namespace {

Mat fixed_equations(const Comodule& m) {
  const int n = m.hopf().rank(), r = m.rank();
  const Vec& one = m.hopf().algebra().unit();
  Mat sys(n * r, r);
  for (int k = 0; k < n; ++k) {
    Mat block = m.action(k);
    for (int d = 0; d < r; ++d) block(d, d) -= one(k);
    sys.middleRows(k * r, r) = block;
  }
  return sys;
}

}  // namespace

Mat fixed_points(const Comodule& m) { return saturated_basis(kernel(fixed_equations(m)), m.ring()); }

Mat fixed_points_via_theta(const Comodule& m, const Vec& theta_dual) { return m.action(theta_dual); }

FixedPointReport fixed_points_checked(const Comodule& m, const std::optional<Vec>& theta_dual) {
  FixedPointReport rep;
  rep.basis = fixed_points(m);
  if (theta_dual) {
    rep.theta_route = true;
    rep.theta_agrees = lattice_equal(rep.basis, fixed_points_via_theta(m, *theta_dual), m.ring());
  }
  return rep;
}

CoinvariantReport coinvariants(const Comodule& m, const Vec& theta_dual) {
  CoinvariantReport rep;
  const int n = m.hopf().rank(), r = m.rank();
  const Vec& one = m.hopf().algebra().unit();
  Mat rel(r, n * r);
  for (int k = 0; k < n; ++k) {
    Mat block = m.action(k);
    for (int d = 0; d < r; ++d) block(d, d) -= one(k);
    rel.middleCols(k * r, r) = block;
  }
  rep.relations = rel;
  const int rel_rank = rank(rel);
  rep.quotient_rank = r - rel_rank;
  const Mat t = m.action(theta_dual);
  rep.kills_relations = is_zero_matrix(sparse_product(t, rel));
  const Mat ker = kernel(t);
  rep.kernel_matches = ker.cols() == rel_rank && (rel_rank == 0 || lattice_equal(saturated_basis(ker, m.ring()), rel, m.ring()));
  const Mat fixed = fixed_points(m);
  rep.image_matches = fixed.cols() == rep.quotient_rank && lattice_equal(fixed, t, m.ring());
  return rep;
}

Comodule tensor_diagonal(const Comodule& m, const Comodule& n) {
  if (m.hopf_ptr() != n.hopf_ptr() && !hopf_equal(m.hopf(), n.hopf()))
    throw Error(ErrorKind::DimensionMismatch, "comodules over different Hopf algebras");
  const HopfAlgebra& h = m.hopf();
  const int dim = h.rank(), rm = m.rank(), rn = n.rank();
  const auto& left = h.algebra().left_matrices();
  Mat coaction = Mat::Zero(rm * rn * dim, rm * rn);
  for (int i = 0; i < rm; ++i)
    for (int a = 0; a < rm; ++a)
      for (int k1 = 0; k1 < dim; ++k1) {
        const FieldElem& x = m.coaction()(a * dim + k1, i);
        if (x.is_zero()) continue;
        for (int j = 0; j < rn; ++j)
          for (int b = 0; b < rn; ++b)
            for (int k2 = 0; k2 < dim; ++k2) {
              const FieldElem& y = n.coaction()(b * dim + k2, j);
              if (y.is_zero()) continue;
              const FieldElem xy = x * y;
              for (int c = 0; c < dim; ++c) {
                const FieldElem& s = left[k1](c, k2);
                if (s.is_zero()) continue;
                coaction((a * rn + b) * dim + c, i * rn + j) += xy * s;
              }
            }
      }
  return Comodule(m.hopf_ptr(), std::move(coaction));
}

ModuleAction hom_module(const Comodule& m, const Comodule& n) {
  const HopfAlgebra& h = m.hopf();
  const int dim = h.rank(), rm = m.rank(), rn = n.rank();
  const auto& left = h.algebra().left_matrices();
  std::vector<Mat> psi_n(dim), psi_m_s(dim);
  for (int a = 0; a < dim; ++a) psi_n[a] = n.action(a);
  // psi_M(S^D f_b); S^D f_b = sum_l S(b, l) f_l
  for (int b = 0; b < dim; ++b) psi_m_s[b] = m.action(Vec(h.antipode().row(b).transpose()));
  ModuleAction act;
  for (int k = 0; k < dim; ++k) {
    Mat g = Mat::Zero(rm * rn, rm * rn);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const FieldElem& c = left[a](k, b);
        if (c.is_zero()) continue;
        // vec(X phi Y) = kron(X, Y^T) vec(phi) for row-major vec
        const Mat yt = psi_m_s[b].transpose();
        for (int p = 0; p < rn; ++p)
          for (int q = 0; q < rn; ++q) {
            const FieldElem& x = psi_n[a](p, q);
            if (x.is_zero()) continue;
            const FieldElem cx = c * x;
            for (int s = 0; s < rm; ++s)
              for (int t = 0; t < rm; ++t)
                if (!yt(s, t).is_zero()) g(p * rm + s, q * rm + t) += cx * yt(s, t);
          }
      }
    act.acts.push_back(std::move(g));
  }
  return act;
}

Mat equivariant_maps(const Comodule& m, const Comodule& n) {
  const int dim = m.hopf().rank(), rm = m.rank(), rn = n.rank();
  const int sz = rm * rn;
  Mat sys = Mat::Zero(dim * sz, sz);
  for (int k = 0; k < dim; ++k) {
    const Mat pn = n.action(k), pm = m.action(k);
    // psi_N phi - phi psi_M, row-major vec
    for (int p = 0; p < rn; ++p)
      for (int s = 0; s < rm; ++s) {
        const int row = k * sz + p * rm + s;
        for (int q = 0; q < rn; ++q)
          if (!pn(p, q).is_zero()) sys(row, q * rm + s) += pn(p, q);
        for (int t = 0; t < rm; ++t)
          if (!pm(t, s).is_zero()) sys(row, p * rm + t) -= pm(t, s);
      }
  }
  return saturated_basis(kernel(sys), m.ring());
}

bool hom_fixed_check(const Comodule& m, const Comodule& n) {
  const Mat lhs = equivariant_maps(m, n);
  const Comodule hom = from_module(m.hopf_ptr(), hom_module(m, n));
  const Mat rhs = fixed_points(hom);
  return lattice_equal(lhs, rhs, m.ring());
}

namespace {

// |N_{K/Q}(x)| for x in K, through the multiplication matrix on the power basis.
Rational field_norm(const FieldElem& x, const FieldPtr& f) {
  const int degree = f->degree();
  if (degree == 1) return abs(x.rational_value());
  QMat mult(degree, degree);
  for (int k = 0; k < degree; ++k) {
    const FieldElem col = x * FieldElem::generator(f).pow(k);
    const auto c = col.coords(degree);
    for (int i = 0; i < degree; ++i) mult(i, k) = c[i];
  }
  return abs(determinant(mult));
}

// Index of the R-span of the columns of a square matrix over R inside R^r,
// with the primes that are units of R removed; 1 exactly for a unit determinant.
Integer unit_defect(const FieldElem& det, const RingSpec& r) {
  const Rational n = field_norm(det, r.field());
  Integer num = n.get_num();
  if (r.mode() == RingSpec::Mode::InvertPrimes) {
    for (long p : r.primes())
      while (num % p == 0) num /= p;
    return num;
  }
  Integer kept = 1;
  for (long p : r.primes())
    while (num % p == 0) num /= p, kept *= p;
  return kept;
}

}  // namespace

std::optional<Mat> free_basis_over_dual(const Comodule& m) {
  const int n = m.hopf().rank(), r = m.rank();
  if (r % n != 0) return std::nullopt;
  const int s = r / n;
  std::vector<Mat> acts;
  for (int k = 0; k < n; ++k) acts.push_back(m.action(k));
  auto span = [&](const Mat& w) {
    Mat b(r, w.cols() * n);
    for (int i = 0; i < w.cols(); ++i)
      for (int k = 0; k < n; ++k) b.col(i * n + k) = sparse_product(acts[k], Vec(w.col(i)));
    return b;
  };
  auto defect = [&](const Mat& w) -> std::optional<Integer> {
    const FieldElem d = determinant(span(w));
    if (d.is_zero()) return std::nullopt;
    return unit_defect(d, m.ring());
  };

  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> coef(-2, 2);
  // Start: greedy accumulation of cyclic vectors independent over K.
  auto start = [&](int attempt) -> std::optional<Mat> {
    Mat gens(r, 0);
    for (int idx = 0; idx < 4 * r && gens.cols() < s; ++idx) {
      Vec w = Vec::Zero(r);
      if (attempt == 0) {
        w(idx % r) = 1;
      } else {
        for (int i = 0; i < r; ++i) w(i) = coef(rng);
      }
      Mat g2(r, gens.cols() + 1);
      g2 << gens, w;
      const Mat b = span(g2);
      if (rank(b) != b.cols()) continue;
      gens = g2;
    }
    if (gens.cols() != s) return std::nullopt;
    return gens;
  };
  std::vector<FieldElem> steps = {m.ring().one(), -m.ring().one()};
  if (m.ring().degree() > 1) {
    const FieldElem g = m.ring().from_order_coords([&] {
      std::vector<Rational> c(m.ring().degree(), Rational(0));
      c[1] = 1;
      return c;
    }());
    steps.push_back(g);
    steps.push_back(-g);
  }
  // Then descend on the index of the A^D-span by moves w_i += c v, where v runs
  // over the basis of M and its images under the f_k.
  std::vector<Vec> moves;
  for (int j = 0; j < r; ++j) moves.push_back(Vec(Mat::Identity(r, r).col(j)));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < r; ++j) {
      const Vec v = acts[k].col(j);
      if (!is_zero_matrix(v) && !matrices_equal(v, Vec(Mat::Identity(r, r).col(j)))) moves.push_back(v);
    }
  for (int attempt = 0; attempt < 12; ++attempt) {
    auto w0 = start(attempt);
    if (!w0) continue;
    Mat w = *w0;
    auto cur = defect(w);
    if (!cur) continue;
    for (int iter = 0; iter < 400 && *cur != 1; ++iter) {
      bool improved = false;
      for (int i = 0; i < s && !improved; ++i)
        for (std::size_t j = 0; j < moves.size() && !improved; ++j)
          for (const auto& c : steps) {
            const Vec delta = moves[j] * c;
            w.col(i) += delta;
            const auto d = defect(w);
            if (d && *d < *cur) {
              cur = d;
              improved = true;
              break;
            }
            w.col(i) -= delta;
          }
      if (!improved) break;
    }
    if (*cur == 1) return w;
  }
  return std::nullopt;
}

bool is_free_basis(const Comodule& m, const Mat& w) {
  const int n = m.hopf().rank(), r = m.rank();
  if (w.rows() != r || w.cols() * n != r) return false;
  Mat b(r, r);
  for (int i = 0; i < w.cols(); ++i)
    for (int k = 0; k < n; ++k) b.col(i * n + k) = sparse_product(m.action(k), Vec(w.col(i)));
  return has_unit_determinant(b, m.ring());
}

// h (e_i (x) w) = sum h_(1) e_i (x) h_(2) w, so e_i (x) w_j generate the diagonal
// tensor product freely whenever the w_j generate m freely.
std::optional<Mat> tensor_free_basis(const Comodule& b, const Comodule& m) {
  const auto w = free_basis_over_dual(m);
  if (!w) return std::nullopt;
  const int rb = b.rank();
  Mat gens = Mat::Zero(rb * m.rank(), rb * w->cols());
  const int rm = m.rank();
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < w->cols(); ++j)
      for (int k = 0; k < rm; ++k) gens(i * rm + k, i * w->cols() + j) = (*w)(k, j);
  return gens;
}

}  // namespace hopftwist
