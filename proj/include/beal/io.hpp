#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "beal/algebra.hpp"
#include "beal/nstructure.hpp"

namespace beal {

using Json = nlohmann::ordered_json;

/// Raw labelled table as found in an algebra document, before validation.
struct AlgebraDocument {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
};

/// {"elements": [...], "table": [[...], ...]}. Throws InputError on schema errors.
AlgebraDocument parse_algebra_document(const Json& j);
Json algebra_to_json(const BEAlgebra& a);

/// {"function": {"<label>": "<decimal or p/q>", ...}} covering every element
/// exactly once. Integer JSON numbers are accepted; floating-point numbers are
/// rejected because they are not exact.
NFunction parse_function_document(const BEAlgebra& a, const Json& j);
Json function_to_json(const BEAlgebra& a, const NFunction& f);

/// Exact rational from a JSON string or integer.
Rational rational_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// Reads and validates; throws InputError or AxiomError.
BEAlgebra load_algebra(const std::filesystem::path& path);
NFunction load_function(const BEAlgebra& a, const std::filesystem::path& path);

}  // namespace beal
