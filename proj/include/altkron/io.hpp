#pragma once

// JSON files. Scalars are strings ("3", "-2/5", residues in decimal), sparse
// vectors are lists of [index, "scalar"] pairs and every top-level object
// carries "format": 1. Malformed data raises InputError.

#include "altkron/coordinatized.hpp"
#include "altkron/plucker.hpp"
#include "altkron/poly.hpp"
#include "altkron/report.hpp"

#include "json.hpp"

#include <string>

namespace altkron {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json sparse_to_json(const Vec& v);
/// Dense vector of length n from [index, scalar] pairs.
Vec sparse_from_json(const Field& f, std::size_t n, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols, const Json& j);

/// {"format", "field", "dim", "basis", "unit"?, "table"}; table[i][j] is a sparse vector.
Json algebra_to_json(const AlgebraTable& a);
AlgebraTable algebra_from_json(const Json& j);

/// {"format", "E11", "E12", "E21", "E22"} as sparse vectors of `a`.
Json units_to_json(const MatrixUnits& e);
MatrixUnits units_from_json(const Json& j, const AlgebraTable& a);

/// {"format", "B": algebra, "V": {"dim", "action"}, "form": [[sparse B-element]]}.
Json spec_to_json(const KronSpec& spec);
KronSpec spec_from_json(const Json& j);

/// List of {"exponents": [...], "coeff": "..."}.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, const Field& f, const std::vector<std::string>& vars);

/// {"format", "n", "field"?, "variables"?, "entries": {"i,j": poly or scalar}} with i < j.
Json family_to_json(const PolyFamily& fam);
PolyFamily family_from_json(const Json& j);

Json check_to_json(const Check& c);
Json checks_to_json(const CheckList& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string read_text_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace altkron
