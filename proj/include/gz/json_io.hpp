#pragma once

// JSON and CSV encodings shared by the command-line tool.
//
// Complex values use {"re": "<decimal>", "im": "<decimal>", "bits": n};
// reals are decimal strings with a precision-derived digit count.

#include "gz/asym.hpp"
#include "gz/complex.hpp"
#include "gz/decomp.hpp"
#include "gz/voronin.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gz {

using Json = nlohmann::ordered_json;

Json to_json(const ComplexHP& z);
Json to_json(const Real& x);
Json to_json(const AsymptoticReport& report);
Json to_json(const DominanceReport& report);
Json to_json(const ApproachResult& result);

/// Inverse of to_json(ComplexHP). Throws std::invalid_argument.
ComplexHP complex_from_json(const Json& j);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace gz
