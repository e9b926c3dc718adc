#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "liemod/cochain.hpp"
#include "liemod/lie.hpp"
#include "liemod/ooper.hpp"
#include "liemod/onstruct.hpp"

namespace liemod {

// Field order is insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

// Every reader throws Error(Parse) naming `where` on malformed input and
// Error(DimensionMismatch) when a shape disagrees with the expected one.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t len, const std::string& where);

/// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Sparse [[i, j, [coeffs...]], ...], only nonzero entries. With skew, only
/// i < j is written and read back with skew completion.
Json tensor_to_json(std::size_t dim, const std::vector<Rational>& tensor, bool skew);
std::vector<Rational> tensor_from_json(const Json& j, std::size_t dim, bool skew, const std::string& where);

/// {kind, dim, brackets[, names]}
Json algebra_to_json(const LieAlgebra& g);
/// Throws the validator's error (SkewViolation, JacobiViolation) on a bad tensor.
LieAlgebra algebra_from_json(const Json& j, const std::string& where);

/// {kind, algebra_ref, dim, actions}
Json rep_to_json(const Representation& rep, const std::string& algebra_ref);

/// {kind, ambient, basis}
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const std::string& where);

/// {kind, dim, entries: [[i, j, "p/q"], ...]}, i < j.
Json bivector_to_json(const Bivector& r);
Bivector bivector_from_json(const Json& j, const std::string& where);

/// {kind, degree, source_dim, target_dim, values: [[[indices], [vector]], ...]}
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const std::string& where);

/// {kind, dim, products}
Json pre_lie_to_json(const PreLieProduct& p);

/// Required field; throws Error(Parse).
const Json& field(const Json& obj, const char* key, const std::string& where);
std::size_t size_field(const Json& obj, const char* key, const std::string& where);
std::string string_field(const Json& obj, const char* key, const std::string& where);

/// Parses text, turning syntax errors into Error(Parse) with line and column.
Json parse_json_text(const std::string& text, const std::string& source);

}  // namespace liemod
