#pragma once

// JSON forms of groups, numbers, matrices, states and CHSH settings.
//
// Reals may be JSON numbers or exact strings built from decimals, "sqrt(x)",
// "*" and "/", e.g. "39/86", "-1/sqrt(3)", "sqrt(3)/6". Complex numbers are a
// real or {"re": real, "im": real}.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrf/bell.hpp"
#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/states.hpp"

namespace qrf {

using Json = nlohmann::json;

// Malformed input. Derives from invalid_argument so callers can treat it as
// a configuration error.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_real(const Json& j);
double parse_real_expression(const std::string& text);
Complex parse_complex(const Json& j);
Json complex_to_json(Complex z);

// Plain list of complex values, optionally {"scale": real, "values": [...]}.
std::vector<Complex> vector_from_json(const Json& j);
// Array of rows, or {"rows", "cols", "entries"} with row-major entries; an
// optional "scale" multiplies every entry.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

// {"name", "order", "compose", "identity"} tables are returned as read, for
// validation reports.
CayleyTable cayley_from_json(const Json& j);
// Accepts a table, {"cyclic": n}, {"builtin": "S3"} or a spec string.
GroupPtr group_from_json(const Json& j);
// "S3", "cyclic:n" or "Zn".
GroupPtr parse_group_spec(const std::string& spec);
Json group_to_json(const GroupTable& g);

// {"group", "frame", "coeffs", optional "row_elements", optional
// "normalize"}. row_elements[r] names the group element of printed row r.
BipartiteState state_from_json(const Json& j);

// {"alice": [[x,y,z], [x,y,z]], "bob": [...]}.
ChshSettings settings_from_json(const Json& j);

// Throws FormatError for unreadable or unparsable files.
Json load_json_file(const std::filesystem::path& path);

}  // namespace qrf
