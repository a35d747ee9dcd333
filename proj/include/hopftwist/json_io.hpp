#pragma once

// JSON encodings of rings, algebras, Hopf algebras, comodules, bundles and
// torsors. Rationals are canonical "p/q" strings, elements are coefficient
// arrays in the power basis, matrices are arrays of rows.

#include <filesystem>
#include <map>
#include <string>

#include "hopftwist/phs.hpp"
#include "json.hpp"

namespace hopftwist::json_io {

using Json = nlohmann::json;

Json encode(const Rational& q);
Json encode(const FieldElem& x, const RingSpec& r);
Json encode(const Vec& v, const RingSpec& r);
Json encode(const Mat& m, const RingSpec& r);
Json encode(const RingSpec& r);
Json encode(const FiniteAlgebra& a);
Json encode(const HopfAlgebra& h);
/// Coaction and rank; the Hopf algebra is referenced by `hopf_ref`.
Json encode(const Comodule& m, const std::string& hopf_ref);
/// Gram and rank; the comodule is inlined when present.
Json encode(const SymBundle& b, const std::string& hopf_ref);
Json encode(const PHS& b, const std::string& hopf_ref);

/// An element given as a coefficient array, a number, or an expression string.
FieldElem decode_element(const Json& j, const RingSpec& r);
Vec decode_vector(const Json& j, const RingSpec& r, int size);
Mat decode_matrix(const Json& j, const RingSpec& r, int rows, int cols);
RingSpec decode_ring(const Json& j);
FiniteAlgebra decode_algebra(const Json& j);
HopfAlgebra decode_hopf(const Json& j);
Comodule decode_comodule(const Json& j, HopfPtr hopf);
SymBundle decode_bundle(const Json& j, const RingSpec& r, const HopfPtr& hopf);
PHS decode_phs(const Json& j, HopfPtr hopf);

/// Reads documents from disk and resolves `hopf_ref` / `module_ref` paths
/// relative to the referring file. All failures raise SchemaError or ParseError.
class Loader {
 public:
  /// When `hopf` is given it replaces every `hopf_ref`.
  explicit Loader(HopfPtr hopf = nullptr) : override_(std::move(hopf)) {}

  Json read(const std::filesystem::path& path) const;
  HopfPtr hopf(const std::filesystem::path& path);
  Comodule comodule(const std::filesystem::path& path);
  SymBundle bundle(const std::filesystem::path& path);
  PHS phs(const std::filesystem::path& path);
  Mat matrix(const std::filesystem::path& path, const RingSpec& r, int rows, int cols) const;

 private:
  HopfPtr referenced_hopf(const Json& j, const std::filesystem::path& dir);

  HopfPtr override_;
  std::map<std::string, HopfPtr> cache_;
};

}  // namespace hopftwist::json_io
