#include "qsdiag/json_io.hpp"

#include <cmath>

#include "qsdiag/error.hpp"

namespace qsd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<double> real_array(const json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError(std::string("field \"") + key + "\" holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<cplx> complex_entries(const json& j, std::size_t expected) {
  const auto re = real_array(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = real_array(j.at("im"), "im");
  if (re.size() != expected || im.size() != expected) {
    throw DimensionError("expected " + std::to_string(expected) + " entries, got re=" +
                         std::to_string(re.size()) + " im=" + std::to_string(im.size()));
  }
  std::vector<cplx> out(expected);
  for (std::size_t i = 0; i < expected; ++i) out[i] = {re[i], im[i]};
  return out;
}

void put_entries(ordered_json& j, std::span<const cplx> data) {
  ordered_json re = ordered_json::array(), im = ordered_json::array();
  // +0.0 folds negative zeros so output does not depend on rounding sign
  for (const auto& z : data) {
    re.push_back(z.real() + 0.0);
    im.push_back(z.imag() + 0.0);
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
}

}  // namespace

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  put_entries(j, m.data());
  return j;
}

ComplexMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  return ComplexMatrix::from_row_major(rows, cols, complex_entries(j, rows * cols));
}

ordered_json state_to_json(const PureState& s) {
  ordered_json j;
  j["n_qubits"] = s.n_qubits();
  put_entries(j, s.amplitudes());
  return j;
}

PureState state_from_json(const json& j, double tol) {
  const std::size_t n = count_field(j, "n_qubits");
  if (n < 1 || n > static_cast<std::size_t>(kMaxQubits))
    throw DimensionError("n_qubits " + std::to_string(n) + " out of range");
  return PureState::from_amplitudes(complex_entries(j, std::size_t{1} << n), tol);
}

ordered_json channel_to_json(const KrausChannel& ch) {
  ordered_json j;
  j["name"] = ch.name();
  ordered_json ops = ordered_json::array();
  for (const auto& f : ch.operators()) ops.push_back(matrix_to_json(f));
  j["operators"] = std::move(ops);
  return j;
}

KrausChannel channel_from_json(const json& j) {
  const json& ops = field(j, "operators");
  if (!ops.is_array()) throw ParseError("field \"operators\" must be an array");
  std::vector<ComplexMatrix> mats;
  for (const auto& o : ops) mats.push_back(matrix_from_json(o));
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("field \"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  return KrausChannel(std::move(mats), std::move(name));
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

ComplexMatrix parse_matrix_json(std::string_view text) {
  return matrix_from_json(parse_json_text(text));
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace qsd
