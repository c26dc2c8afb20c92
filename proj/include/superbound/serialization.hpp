#pragma once

// JSON encoding of states, specs, configs and reports.
//
//   complex    [re, im]
//   state      {"dim_a": int, "dim_b": int, "amplitudes": [[re, im], ...]}  (row-major)
//   spec       {"coefficients": [[re, im], ...], "components": [state, ...]}
//   config     {"n", "dim_a", "dim_b", "family", "seed", "coefficient_mode",
//               "block_a", "block_b", "coefficients"}
//
// Doubles are written in the shortest form that parses back to the same bits.

#include <stdexcept>

#include <json.hpp>

#include "superbound/assistant.hpp"
#include "superbound/bounds.hpp"
#include "superbound/coefficients.hpp"
#include "superbound/ensembles.hpp"

namespace superbound {

using Json = nlohmann::json;

/// Malformed or ill-typed JSON input.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json state_to_json(const BipartitePureState& state);
BipartitePureState state_from_json(const Json& j);

Json spec_to_json(const SuperpositionSpec& spec);
/// Throws SchemaError for structural problems, and for values that break
/// state or spec invariants (e.g. an unnormalized component).
SuperpositionSpec spec_from_json(const Json& j);

Json config_to_json(const EnsembleConfig& config);
/// Missing optional fields take their defaults; "n", "dim_a" and "dim_b"
/// are required.
EnsembleConfig config_from_json(const Json& j);

Json report_to_json(const BoundReport& report);
Json report_to_json(const AssistantCheckReport& report);
Json coeffs_to_json(const NormalizationCoeffs& coeffs);

/// Decimal digits of a 128-bit unsigned integer.
std::string to_decimal(UInt128 value);

}  // namespace superbound
