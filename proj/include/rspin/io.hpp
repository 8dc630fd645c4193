#pragma once

// JSON form of Frobenius algebras and closed Lambda_r-Frobenius algebras.
// Scalars are strings in the scalar syntax, read against "field_order".

#include <string>
#include <variant>

#include "json.hpp"
#include "rspin/constructors.hpp"

namespace rspin {

using Json = nlohmann::ordered_json;

Json to_json(const FrobeniusMaps& a);
Json to_json(const LambdaFrobenius& alg);

/// Missing "comult" is derived from mult and counit.
FrobeniusAlgebraData frobenius_from_json(const Json& j);
LambdaFrobenius lambda_from_json(const Json& j);

using AlgebraFile = std::variant<FrobeniusAlgebraData, LambdaFrobenius>;

/// Dispatches on "kind"; throws ParseError for malformed files and
/// InvalidInput for data that violates an invariant.
AlgebraFile load_algebra(const Json& j);
AlgebraFile load_algebra_file(const std::string& path);

Json scalar_json(const CycScalar& s);

}  // namespace rspin
