#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "numrad/binomial.hpp"
#include "numrad/matrix.hpp"
#include "numrad/radius.hpp"

namespace numrad {

using Json = nlohmann::ordered_json;

// Matrix wire format: {"n": <int>, "entries": [[[re,im], ...], ...]},
// row-major, entries as IEEE-754 doubles.
Json matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const nlohmann::json& j);

// Same layout with a flat entry list for vectors.
Json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

// Parses text, throwing ParseError with a one-line diagnostic.
nlohmann::json parse_json(const std::string& text, const std::string& what);

// Value rounded to 12 significant digits, so the shortest round-trip
// serialization prints at most 12 of them.
double round12(double x);

// 12 significant digits with trailing zeros kept ("%#.12g").
std::string format12(double x);

// CSV with header "theta,re,im", 17 significant digits per field.
std::string boundary_csv(const std::vector<BoundaryPoint>& points);

// {"n":..., "terms":[{"k":0,"matrix":{...}},...], "sum":{...},
//  "residual_norm":...} with the residual against direct powering.
Json expansion_to_json(const BinomialExpansion& e, double residual_norm);

}  // namespace numrad
