#pragma once

#include <json.hpp>

#include "bqs/fundamental.hpp"
#include "bqs/groebner.hpp"
#include "bqs/hilbert.hpp"
#include "bqs/polynomial.hpp"

namespace bqs {

using Json = nlohmann::ordered_json;

// {"p":2,"n":3,"terms":[{"coeff":"-1","exp":[0,1,0,0,1,1]}, ...]}
// Coefficients are strings "a" or "a/b"; terms lex-descending.
Json to_json(const Polynomial& f);
// Throws ParseError on a malformed document and DimensionError on an exponent
// array of the wrong length.
Polynomial polynomial_from_json(const Json& doc);

// {"remainder": <polynomial>, "used": [{"coeff":"1","index":[...]}, ...]}
Json to_json(const ReductionRecord& record);

Json to_json(const FExpansion& expansion);
Json to_json(const GCombination& combination);

// {"n":..,"p":..,"rows":[{"deg":[k,l],"dim":d}, ...],"total":..}
Json to_json(const HilbertTable& table);

Json to_json(const GroebnerReport& report);

}  // namespace bqs
