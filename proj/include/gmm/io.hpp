#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmm/lattice.hpp"
#include "gmm/pipeline.hpp"

namespace gmm::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, everything else a string.
Json to_json(const Integer& x);
/// Integers as above; non-integers as "a/b" strings.
Json to_json(const Rational& x);
Json to_json(const RationalMatrix& m);
Json to_json(const ReductionReport& report);
Json to_json(const Model& model, const std::vector<std::string>& coords);

/// Accepts a JSON integer or a string "a" / "a/b".
Rational rational_from_json(const Json& value);
RationalMatrix matrix_from_json(const Json& value);

/// Adelic data file:
///   {"n": 2, "default": [[...]], "components": [{"prime": 2, "matrix": [[...]]}]}
/// "default" is optional (identity). Throws ParseError.
AdeleMatrix read_adele_document(std::string_view text);

}  // namespace gmm::io
