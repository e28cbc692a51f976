#include "qcorr/cli/state_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qcorr/error.hpp"
#include "qcorr/state.hpp"

namespace qcorr::cli {

namespace {

cplx entry_from_json(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw Error(Errc::ParseError, "matrix entry must be a number or [re, im], got " + e.dump());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    throw Error(Errc::ParseError, "expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(Errc::ParseError, "row " + std::to_string(r) + " must have " +
                                        std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  if (!m.allFinite()) throw Error(Errc::ParseError, "non-finite matrix entry");
  return m;
}

ComplexMatrix parse_state_text(std::string_view text) {
  return matrix_from_json(parse_json(text), 4, 4);
}

ComplexMatrix read_state_file(const std::string& path) { return parse_state_text(read_file(path)); }

ComplexMatrix load_state_argument(const std::string& arg) {
  constexpr std::string_view prefix = "ref:";
  if (arg.rfind(prefix, 0) == 0) return reference_state(arg.substr(prefix.size())).matrix();
  return read_state_file(arg);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      if (v.imag() == 0.0) {
        row.push_back(v.real());
      } else {
        row.push_back({v.real(), v.imag()});
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << (r == 0 ? "[" : " [");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      if (c > 0) out << ", ";
      if (v.imag() == 0.0) {
        out << format_double(v.real());
      } else {
        out << "[" << format_double(v.real()) << ", " << format_double(v.imag()) << "]";
      }
    }
    out << "]" << (r + 1 < m.rows() ? ",\n" : "");
  }
  out << "]\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

KrausChannel channel_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("builtin")) {
    const double param = j.value("param", 0.0);
    return builtin_channel(j.at("builtin").get<std::string>(), param);
  }
  const nlohmann::json* ops = &j;
  if (j.is_object() && j.contains("kraus")) ops = &j.at("kraus");
  if (!ops->is_array()) throw Error(Errc::ParseError, "channel must be a builtin or a Kraus list");
  KrausChannel ch;
  for (const auto& op : *ops) ch.ops.push_back(matrix_from_json(op, 2, 2));
  if (ch.ops.empty()) throw Error(Errc::EmptyChannel, "Kraus list is empty");
  return ch;
}

KrausChannel parse_channel_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  for (const char* known : {"identity", "zero_plus", "dephasing", "depolarizing", "amplitude_damping"}) {
    if (name != known) continue;
    double param = 0.0;
    if (colon != std::string::npos) {
      const std::string text = spec.substr(colon + 1);
      std::size_t used = 0;
      try {
        param = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != text.size()) {
        throw Error(Errc::ParseError, "bad channel parameter '" + text + "'");
      }
    }
    return builtin_channel(name, param);
  }
  try {
    return channel_from_json(parse_json(read_file(spec)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string digest(const ComplexMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_matrix(m)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

}  // namespace qcorr::cli
