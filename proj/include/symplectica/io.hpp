// JSON, CSV, LaTeX and text forms of polynomials, tabloids, vectors and basis
// matrices.

#pragma once

#include <json.hpp>
#include <string>

#include "symplectica/global_basis.hpp"

namespace symplectica {

using json = nlohmann::json;

/// [[exponent, coefficient], ...]; coefficients beyond 64 bits become strings.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// [["1","3","2b"], ["1","3b"], ...], leftmost column first.
json to_json(const Tabloid& t);
Tabloid tabloid_from_json(const json& j);

/// [{"tabloid": ..., "poly": ...}, ...] in ⊴ order.
json to_json(const WVector& v);
WVector wvector_from_json(const json& j, int rank);

json to_json(const BasisMatrix& m);
BasisMatrix matrix_from_json(const json& j);

enum class Format { json, csv, latex, text };
Format parse_format(std::string_view s);

/// Dense table; "." for zero entries.
std::string to_csv(const BasisMatrix& m);
/// \begin{array} with tabloids drawn by rows, diagonal entries in bold.
std::string to_latex(const BasisMatrix& m);
std::string to_text(const BasisMatrix& m);
std::string emit(const BasisMatrix& m, Format f);

/// q-polynomial in LaTeX: "2q^{5}+q^{7}".
std::string latex_poly(const LaurentPoly& p);

}  // namespace symplectica
