#pragma once

// Validation against the subset of JSON Schema used by the files in
// schemas/: type, enum, const, properties, required, additionalProperties,
// items, minItems, minimum, exclusiveMinimum, oneOf, anyOf and local $ref.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace solenoid {

/// Human-readable problems, each prefixed by the JSON pointer of the offending
/// value. Empty when the document conforms.
std::vector<std::string> schema_errors(const nlohmann::json& schema, const nlohmann::json& document);

} // namespace solenoid
