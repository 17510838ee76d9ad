#pragma once

// JSON forms of the library's value types.  Every writer has a matching
// reader that reproduces the value exactly; readers throw ParseError on
// malformed input.

#include <json.hpp>

#include "tlimm/classify.hpp"
#include "tlimm/immanant.hpp"

namespace tlimm::io {

using Json = nlohmann::ordered_json;

// {"n": 4, "terms": [{"perm": "2143", "coeff": "-3"}, ...]}
Json to_json(const Immanant& f);
Immanant immanant_from_json(const Json& j);

// {"n": 4, "lambda": [...], "mu": [...]}
Json to_json(const SkewShape& s);
SkewShape shape_from_json(const Json& j);

// {"kind": "two", "sign": 1, "shapes": [...]}, or {"kind": "none"}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// {"case": "case1", "a": .., "b": .., "e": .., "c": .., "d": ..}
Json to_json(const CaseParams& p);
CaseParams case_params_from_json(const Json& j);

// [["1", "0"], ["-1/2", "3"]]
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const std::vector<CmTerm>& terms);
Json to_json(const std::vector<RectTerm>& terms);

// [{"representative": "1234", "coefficient": "1/2"}, ...]
Json to_json(const std::vector<BasisTerm>& terms);
std::vector<BasisTerm> basis_terms_from_json(const Json& j);

// Parses text, converting library exceptions into ParseError.
Json parse_json(std::string_view text);

}  // namespace tlimm::io
