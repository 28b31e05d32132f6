#pragma once

#include "hlya/deformation.hpp"
#include "hlya/errors.hpp"
#include "hlya/extension.hpp"

#include <json.hpp>

#include <string>

namespace hlya {
namespace io {

using nlohmann::json;

// Rationals serialize as "p/q" ("p" when q = 1); polynomials as coefficient
// arrays of such strings; matrices and tensors as nested arrays. All
// serialization is canonical, so round-trips are byte-exact.

json to_json(const Rational& r);
json to_json(const Poly& p);
json to_json(const Matrix& m);
json to_json(const Vec& v);
json to_json(const HomLYAlgebra& A);
json to_json(const LambdaAlgebra& L);
json to_json(const Representation& R);
json to_json(const Cochain& c);
json to_json(const CocyclePair& p);
json to_json(const AbelianExtension& E);
json to_json(const CheckReport& r);
json to_json(const MorphismReport& r);
json to_json(const Cohomology23& h);

// Parsers throw ParseError with a JSON-path location on malformed input
// (including non-rationals such as "1/0"). `where` names the document root
// in error messages.
Rational rational_from_json(const json& j, const std::string& where = "$");
Poly poly_from_json(const json& j, const std::string& where = "$");
Matrix matrix_from_json(const json& j, const std::string& where = "$");
HomLYAlgebra algebra_from_json(const json& j, const std::string& where = "$");
LambdaAlgebra lambda_algebra_from_json(const json& j, const std::string& where = "$");
Representation representation_from_json(const json& j, const std::string& where = "$");
Cochain cochain_from_json(const json& j, const std::string& where = "$");
CocyclePair pair_from_json(const json& j, const std::string& where = "$");
AbelianExtension extension_from_json(const json& j, const std::string& where = "$");

/// True when the document's tensor entries are polynomial coefficient arrays
/// rather than rational strings.
bool looks_like_lambda_algebra(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

std::string dump(const json& j); // canonical text form (2-space indent, trailing newline)

std::string report_to_text(const CheckReport& r);

} // namespace io
} // namespace hlya
