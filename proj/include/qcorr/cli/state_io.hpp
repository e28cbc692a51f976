#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qcorr/channels.hpp"
#include "qcorr/types.hpp"

namespace qcorr::cli {

/// State files hold a 4x4 JSON array; each entry is a number or an [re, im] pair:
///
///   [[0.5, 0, 0, 0.5],
///    [0, 0, 0, 0],
///    [0, 0, 0, 0],
///    [0.5, 0, 0, [0.5, 0]]]
///
/// Any other shape is a ParseError.
ComplexMatrix parse_state_text(std::string_view text);
ComplexMatrix read_state_file(const std::string& path);

/// Loads `ref:<name>` as a reference state, anything else as a file path.
ComplexMatrix load_state_argument(const std::string& arg);

/// Matrix of the given shape from parsed JSON, same entry syntax.
ComplexMatrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols);

/// Inverse of parse_state_text; round-trips doubles exactly.
std::string format_matrix(const ComplexMatrix& m);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

void write_text_file(const std::string& path, const std::string& text);

/// Channel specs are either a builtin written `name` or `name:param`
/// (identity, zero_plus, dephasing:p, depolarizing:p, amplitude_damping:g),
/// or the path of a JSON file holding one of
///   {"builtin": "depolarizing", "param": 0.3}
///   {"kraus": [K1, K2, ...]}     each K a 2x2 array in state-file entry syntax.
KrausChannel parse_channel_spec(const std::string& spec);
KrausChannel channel_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of the canonical text form, as 16 hex digits.
std::string digest(const ComplexMatrix& m);

}  // namespace qcorr::cli
