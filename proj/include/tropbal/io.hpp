#pragma once

// JSON encodings of every file format the CLI reads or writes. Parsers throw
// InvalidInput with a message that names the offending field, e.g.
// "terms[2].coeff[0].exp: malformed rational".

#include "tropbal/balance.hpp"
#include "tropbal/fanbundle.hpp"
#include "tropbal/newton.hpp"
#include "tropbal/puiseux.hpp"
#include "tropbal/troppoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tropbal::io {

using Json = nlohmann::json;

/// Parses text as JSON; syntax errors become InvalidInput naming `what`.
Json parse_json(std::string_view text, const std::string& what);
/// Reads and parses a file; a missing file is an InvalidInput too.
Json read_json_file(const std::string& path);

// [{"exp": "p/q", "coeff": "r/s"}, ...] with strictly increasing exponents.
Json to_json(const PuiseuxSeries& s);
PuiseuxSeries puiseux_from_json(const Json& j, const std::string& path = "series");

// {"vars": n, "terms": [{"exponent": [...], "coeff": <series>}]}
Json to_json(const LaurentPolynomialK& f);
LaurentPolynomialK polynomial_from_json(const Json& j);

// {"n": n, "pieces": [{"a": [...], "c": "p/q"}]}
Json to_json(const TropicalPolynomial& g);
TropicalPolynomial tropical_polynomial_from_json(const Json& j);

// {"n": 2, "vertices": [["p/q", "p/q"], ...],
//  "edges": [{"ends": [0] | [0, 1], "dir": [a, b], "weight": w}]}
Json to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const Json& j);

// {"n": n, "picard_rank": r, "chern": [[...], ...]}
Json to_json(const BundleDescriptor& b);
BundleDescriptor bundle_from_json(const Json& j);

// {"n": n, "rays": [[...], ...]}
Json to_json(const Fan1Skeleton& f);
Fan1Skeleton fan_from_json(const Json& j);

// {"horiz": [{"ray": [...], "coef": z}], "base": [...]}
Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

// {"weights": [{"ray": [...], "w": k}]}
Json to_json(const WeightFunction& w);
WeightFunction weights_from_json(const Json& j);

// {"balanced": bool, "defect": [...]}
Json to_json(const DefectVector& d);

/// An integer vector written as a JSON array, e.g. "[1, 0]".
IntVec int_vector_from_text(std::string_view text, const std::string& what);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace tropbal::io
