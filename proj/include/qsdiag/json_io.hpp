#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qsdiag/core.hpp"
#include "qsdiag/kraus.hpp"

namespace qsd {

// Matrix:  {"rows": r, "cols": c, "re": [...], "im": [...]}, row-major; "im"
//          may be omitted for real matrices.
// State:   {"n_qubits": n, "re": [...], "im": [...]}
// Channel: {"name": "...", "operators": [matrix, ...]}
// Malformed input throws ParseError (or DimensionError for shape problems).

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json state_to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j, double tol = 1e-10);

nlohmann::ordered_json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

/// Text-level helpers; output is indented two spaces with a trailing newline.
nlohmann::json parse_json_text(std::string_view text);
ComplexMatrix parse_matrix_json(std::string_view text);
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace qsd
