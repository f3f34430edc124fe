#pragma once

#include <string>

#include "json.hpp"

#include "picod/model.hpp"
#include "picod/verify.hpp"

namespace picod {

using Json = nlohmann::json;

/// Schema:
/// {
///   "instance": {"m": .., "t": .., "S": [..], "kind": ".."},
///   "field": {"b": .., "poly": ..},
///   "beta": ..,
///   "knowledge_mode": "static" | "sequential",
///   "generator": [[..], ..],                  // raw field element values
///   "schedule": [{"row": .., "user": ..}, ..],
///   "length": {"num": .., "den": ..}
/// }
/// nlohmann keeps object keys sorted, so dumps of equal codes are
/// byte-identical.
Json to_json(const DecentralizedCode& code);

/// Inverse of to_json. Revalidates everything: the instance is rebuilt
/// through its factory, the field through the registry, entries through
/// Matrix::set, and the stored kind and length must match the recomputed
/// ones. Throws std::invalid_argument on any mismatch or malformed document.
DecentralizedCode code_from_json(const Json& j);

Json to_json(const VerificationReport& report);

/// dump(2) with a trailing newline; the single serialization used anywhere a
/// byte-stable result matters.
std::string stable_dump(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

} // namespace picod
