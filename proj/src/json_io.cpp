#include "hopftwist/json_io.hpp"

#include <fstream>

#include "hopftwist/parse.hpp"

namespace hopftwist::json_io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing key '") + key + "'");
  return j.at(key);
}

int integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < 0) schema(std::string("'") + key + "' must be a non-negative integer");
  return v.get<int>();
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema("rational must be a string \"p/q\" or an integer");
}

const Json& flat_array(const Json& j, const char* key, std::size_t size) {
  const Json& v = field(j, key);
  if (!v.is_array() || v.size() != size)
    schema(std::string("'") + key + "' must be an array of length " + std::to_string(size));
  return v;
}

std::vector<long> primes_of(const Json& j) {
  if (!j.is_array()) schema("prime list must be an array");
  std::vector<long> out;
  for (const auto& p : j) {
    if (!p.is_number_integer()) schema("primes must be integers");
    out.push_back(p.get<long>());
  }
  return out;
}

}  // namespace

Json encode(const Rational& q) { return rational_to_string(q); }

Json encode(const FieldElem& x, const RingSpec& r) {
  Json out = Json::array();
  for (const auto& c : x.coords(r.degree())) out.push_back(encode(c));
  return out;
}

Json encode(const Vec& v, const RingSpec& r) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i), r));
  return out;
}

Json encode(const Mat& m, const RingSpec& r) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j), r));
    out.push_back(row);
  }
  return out;
}

Json encode(const RingSpec& r) {
  Json out;
  Json poly = Json::array();
  for (const auto& c : r.field()->min_poly()) poly.push_back(encode(c));
  out["min_poly"] = poly;
  out["symbol"] = r.field()->symbol();
  Json basis = Json::array();
  for (Eigen::Index i = 0; i < r.basis().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < r.basis().cols(); ++j) row.push_back(encode(r.basis()(i, j)));
    basis.push_back(row);
  }
  out["basis"] = basis;
  out[r.mode() == RingSpec::Mode::InvertPrimes ? "inverted_primes" : "local_primes"] = r.primes();
  if (!r.constants().empty()) {
    Json c = Json::object();
    for (const auto& [name, v] : r.constants()) c[name] = encode(v, r);
    out["constants"] = c;
  }
  return out;
}

Json encode(const FiniteAlgebra& a) {
  const int n = a.rank();
  Json mult = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) mult.push_back(encode(a.structure_constant(i, j, k), a.ring()));
  Json out;
  out["rank"] = n;
  out["mult"] = mult;
  out["unit"] = encode(a.unit(), a.ring());
  out["ring"] = encode(a.ring());
  return out;
}

Json encode(const HopfAlgebra& h) {
  const int n = h.rank();
  Json out = encode(h.algebra());
  Json comult = Json::array();
  for (int i = 0; i < n; ++i)
    for (int jk = 0; jk < n * n; ++jk) comult.push_back(encode(h.comult()(jk, i), h.ring()));
  out["comult"] = comult;
  out["counit"] = encode(h.counit(), h.ring());
  out["antipode"] = encode(h.antipode(), h.ring());
  return out;
}

Json encode(const Comodule& m, const std::string& hopf_ref) {
  const int rows = static_cast<int>(m.coaction().rows());
  Json coaction = Json::array();
  for (int i = 0; i < m.rank(); ++i)
    for (int jk = 0; jk < rows; ++jk) coaction.push_back(encode(m.coaction()(jk, i), m.ring()));
  Json out;
  out["rank"] = m.rank();
  out["coaction"] = coaction;
  out["hopf_ref"] = hopf_ref;
  return out;
}

Json encode(const SymBundle& b, const std::string& hopf_ref) {
  Json out = b.module() ? encode(*b.module(), hopf_ref) : Json::object();
  if (!b.module()) out["ring"] = encode(b.ring());
  out["rank"] = b.rank();
  out["gram"] = encode(b.gram(), b.ring());
  return out;
}

Json encode(const PHS& b, const std::string& hopf_ref) {
  Json out = encode(b.comodule(), hopf_ref);
  out["algebra"] = encode(b.algebra());
  return out;
}

FieldElem decode_element(const Json& j, const RingSpec& r) {
  if (j.is_array()) {
    if (j.empty() || static_cast<int>(j.size()) > r.degree())
      schema("coefficient array length must be between 1 and the field degree");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(decode_rational(v));
    c.resize(r.degree(), Rational(0));
    return r.from_coords(std::move(c));
  }
  if (j.is_number_integer()) return r.from_rational(Rational(j.get<long>()));
  if (j.is_string()) return parse_element(j.get<std::string>(), r);
  schema("field element must be a coefficient array, an integer or an expression string");
}

Vec decode_vector(const Json& j, const RingSpec& r, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    schema("vector must be an array of length " + std::to_string(size));
  Vec v(size);
  for (int i = 0; i < size; ++i) v(i) = decode_element(j[i], r);
  return v;
}

Mat decode_matrix(const Json& j, const RingSpec& r, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    schema("matrix must have " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      schema("matrix rows must have " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m(i, k) = decode_element(j[i][k], r);
  }
  return m;
}

RingSpec decode_ring(const Json& j) {
  const Json& poly = field(j, "min_poly");
  if (!poly.is_array() || poly.size() < 2) schema("min_poly must list at least two coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : poly) coeffs.push_back(decode_rational(c));
  const std::string symbol = j.contains("symbol") ? j.at("symbol").get<std::string>() : "z";
  FieldPtr f = make_field(coeffs, symbol);
  const int d = f->degree();
  QMat basis = QMat::Identity(d, d);
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || static_cast<int>(b.size()) != d) schema("basis must be degree x degree");
    for (int i = 0; i < d; ++i) {
      if (!b[i].is_array() || static_cast<int>(b[i].size()) != d) schema("basis must be degree x degree");
      for (int k = 0; k < d; ++k) basis(i, k) = decode_rational(b[i][k]);
    }
  }
  if (j.contains("inverted_primes") == j.contains("local_primes"))
    schema("ring needs exactly one of 'inverted_primes' and 'local_primes'");
  const bool local = j.contains("local_primes");
  RingSpec r(f, basis, primes_of(j.at(local ? "local_primes" : "inverted_primes")),
             local ? RingSpec::Mode::LocalizeAt : RingSpec::Mode::InvertPrimes);
  if (j.contains("constants")) {
    const Json& c = j.at("constants");
    if (!c.is_object()) schema("constants must be an object");
    for (const auto& [name, v] : c.items()) r.set_constant(name, decode_element(v, r));
  }
  return r;
}

FiniteAlgebra decode_algebra(const Json& j) {
  RingSpec r = decode_ring(field(j, "ring"));
  const int n = integer_field(j, "rank");
  if (n == 0) schema("rank must be positive");
  const Json& mult = flat_array(j, "mult", static_cast<std::size_t>(n) * n * n);
  std::vector<Mat> left(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) left[i](l, k) = decode_element(mult[(i * n + k) * n + l], r);
  Vec unit = decode_vector(field(j, "unit"), r, n);
  return FiniteAlgebra(std::move(r), std::move(left), std::move(unit));
}

HopfAlgebra decode_hopf(const Json& j) {
  FiniteAlgebra alg = decode_algebra(j);
  const RingSpec& r = alg.ring();
  const int n = alg.rank();
  const Json& c = flat_array(j, "comult", static_cast<std::size_t>(n) * n * n);
  Mat comult(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int jk = 0; jk < n * n; ++jk) comult(jk, i) = decode_element(c[i * n * n + jk], r);
  Vec counit = decode_vector(field(j, "counit"), r, n);
  Mat s = decode_matrix(field(j, "antipode"), r, n, n);
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit), std::move(s));
}

Comodule decode_comodule(const Json& j, HopfPtr hopf) {
  const int m = integer_field(j, "rank");
  const int n = hopf->rank();
  const Json& c = flat_array(j, "coaction", static_cast<std::size_t>(m) * m * n);
  Mat coaction(m * n, m);
  for (int i = 0; i < m; ++i)
    for (int jk = 0; jk < m * n; ++jk) coaction(jk, i) = decode_element(c[i * m * n + jk], hopf->ring());
  return Comodule(std::move(hopf), std::move(coaction));
}

SymBundle decode_bundle(const Json& j, const RingSpec& r, const HopfPtr& hopf) {
  const int m = integer_field(j, "rank");
  Mat gram = decode_matrix(field(j, "gram"), r, m, m);
  if (j.contains("coaction")) {
    if (!hopf) schema("bundle with a coaction needs a Hopf algebra");
    return SymBundle(decode_comodule(j, hopf), std::move(gram));
  }
  return SymBundle(r, std::move(gram));
}

PHS decode_phs(const Json& j, HopfPtr hopf) {
  FiniteAlgebra alg = decode_algebra(field(j, "algebra"));
  return PHS(std::move(alg), decode_comodule(j, std::move(hopf)));
}

Json Loader::read(const fs::path& path) const {
  std::ifstream in(path);
  if (!in) schema("cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

HopfPtr Loader::hopf(const fs::path& path) {
  const std::string key = fs::weakly_canonical(path).string();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  try {
    HopfPtr h = share(decode_hopf(read(path)));
    cache_[key] = h;
    return h;
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "': " + e.what());
  }
}

HopfPtr Loader::referenced_hopf(const Json& j, const fs::path& dir) {
  if (override_) return override_;
  if (j.contains("hopf")) return share(decode_hopf(j.at("hopf")));
  if (j.contains("hopf_ref")) return hopf(dir / j.at("hopf_ref").get<std::string>());
  schema("document needs 'hopf_ref' or an inline 'hopf'");
}

Comodule Loader::comodule(const fs::path& path) {
  try {
    const Json j = read(path);
    return decode_comodule(j, referenced_hopf(j, path.parent_path()));
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "': " + e.what());
  }
}

SymBundle Loader::bundle(const fs::path& path) {
  try {
    const Json j = read(path);
    const fs::path dir = path.parent_path();
    if (j.contains("module_ref")) {
      Comodule m = comodule(dir / j.at("module_ref").get<std::string>());
      Mat gram = decode_matrix(field(j, "gram"), m.ring(), m.rank(), m.rank());
      return SymBundle(std::move(m), std::move(gram));
    }
    if (j.contains("coaction")) {
      HopfPtr h = referenced_hopf(j, dir);
      return decode_bundle(j, h->ring(), h);
    }
    if (j.contains("ring")) return decode_bundle(j, decode_ring(j.at("ring")), nullptr);
    if (override_) return decode_bundle(j, override_->ring(), nullptr);
    schema("bundle needs 'module_ref', a coaction or a 'ring'");
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "': " + e.what());
  }
}

PHS Loader::phs(const fs::path& path) {
  try {
    const Json j = read(path);
    return decode_phs(j, referenced_hopf(j, path.parent_path()));
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "': " + e.what());
  }
}

Mat Loader::matrix(const fs::path& path, const RingSpec& r, int rows, int cols) const {
  try {
    const Json j = read(path);
    return decode_matrix(j.is_object() ? field(j, "matrix") : j, r, rows, cols);
  } catch (const Json::exception& e) {
    schema("'" + path.string() + "': " + e.what());
  }
}

}  // namespace hopftwist::json_io
