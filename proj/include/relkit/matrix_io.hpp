#pragma once

#include "relkit/subspace.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace relkit {

using Json = nlohmann::json;

/// Parses {"rows": r, "cols": c, "entries": [[re, im], ...]} (row-major).
Matrix matrix_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);

/// Loads .json (complex) or .csv (real entries only) by extension.
Matrix load_matrix(const std::string& path);

void save_matrix(const Matrix& m, const std::string& path);

Json subspace_to_json(const Subspace& s);

}  // namespace relkit
