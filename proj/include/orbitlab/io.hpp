#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "orbitlab/castling.hpp"
#include "orbitlab/orbit.hpp"
#include "orbitlab/spectrum.hpp"
#include "orbitlab/tensor_rep.hpp"

// JSON schemas. Scalars are canonical literals; keys are sorted, so dumping a
// parsed document reproduces it byte for byte.
namespace orbitlab::io {

using nlohmann::json;

/// {"space": [k1,...], "terms": [{"coef": "...", "monomial": [[a1,b1],...]}]}
json to_json(const RepVector& v);
/// Throws ParseError on malformed documents or coefficient literals.
RepVector vector_from_json(const json& j);
RepVector parse_vector(std::string_view text);

json to_json(const LieAlgebraElement& x);
json to_json(const OrbitReport& r);
json to_json(const TangentFrame& f);
json to_json(const SphericalSubspace& s);
json to_json(const EigenRecord& r);
json to_json(const StabilityReport& r);
json to_json(const castling::Triplet& t);

/// Integers as JSON numbers, other rationals as "p/q" strings.
json rational_json(const Rational& q);

}  // namespace orbitlab::io
