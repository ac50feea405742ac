#pragma once

#include "strongconv/qcore.hpp"

#include <json.hpp>

#include <string>

namespace strongconv {

using Json = nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major. "dim" is written for square
/// matrices only; on read it is optional but must agree with the arrays when present.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json state_to_json(const DensityMatrix& rho);
/// Throws ParseError on malformed structure, InvariantViolation on an invalid state.
DensityMatrix state_from_json(const Json& j);

/// {"dim_in", "dim_out", "kraus": [matrix, ...]}
Json channel_to_json(const QuantumChannel& channel);
QuantumChannel channel_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace strongconv
