#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/binomial.hpp"
#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace toric::cli {

using nlohmann::json;

// Malformed input: bad JSON or a value of the wrong shape. The CLI exits with 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inline JSON when the text starts with '[' or '{' (after whitespace), else a file path.
json load(const std::string& text_or_path);

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
json to_json(const Integer& x);
// Integer-valued rationals are numbers, others "p/q" strings.
json to_json(const Rational& x);
json to_json(const IntVector& v);
json to_json(const RationalVector& v);
json to_json(const std::vector<IntVector>& vs);
json to_json(const Cone& c);
json to_json(const Fan& f);
json to_json(const LatticePolytope& p);
json to_json(const TDivisor& d);
json to_json(const BinomialIdeal& ideal);
json to_json(const MonomialMap& m);

Integer integer_from(const json& j);
Rational rational_from(const json& j);
IntVector vector_from(const json& j);
std::vector<IntVector> vectors_from(const json& j);
// [[...],...] or {"points": [[...],...]}.
std::vector<IntVector> points_from(const json& j);
Cone cone_from(const json& j);
IntMatrix matrix_from(const json& j);
// {"ambient_dim": n, "maximal_cones": [...]} or a bare list of cones.
Fan fan_from(const json& j);
LatticePolytope polytope_from(const json& j);
// {"fan": ..., "rays": [...], "coefficients": [...]}, {"coefficients": [...]} or a bare
// coefficient list. Without "rays" the coefficients follow fan.rays(). Without any fan a
// complete 2D fan is built from the rays in counterclockwise order.
TDivisor divisor_from(const json& j, const Fan* fan);
BinomialIdeal ideal_from(const json& j);
MonomialMap map_from(const json& j);

}  // namespace toric::cli
