#include "entmono/state_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entmono/errors.hpp"
#include "entmono/format.hpp"

namespace entmono {

using nlohmann::json;

PureState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParameterError("state file: top level must be an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
    throw ParameterError("state file: missing integer field 'n_qubits'");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
    throw ParameterError("state file: missing array field 'amplitudes'");

  const auto n = doc["n_qubits"].get<long long>();
  if (n < 1 || n > 12) throw ParameterError("state file: n_qubits must be in [1, 12]");
  const auto& arr = doc["amplitudes"];
  const std::size_t expected = std::size_t{1} << n;
  if (arr.size() != expected)
    throw ParameterError("state file: expected " + std::to_string(expected) + " amplitudes, got " +
                         std::to_string(arr.size()));

  std::vector<cplx> amps;
  amps.reserve(expected);
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ParameterError("state file: each amplitude must be a [re, im] number pair");
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return PureState(std::move(amps), SubsystemDims::qubits(static_cast<std::size_t>(n)),
                   kFileNormTol);
}

PureState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const PureState& s) {
  std::string out = "{\"n_qubits\": " + std::to_string(s.subsystems()) + ", \"amplitudes\": [";
  bool first = true;
  for (const cplx& z : s.amplitudes()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
  }
  return out + "]}";
}

PureState preset_state(std::string_view name) {
  auto qubit_suffix = [&](std::string_view prefix) -> std::size_t {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw ParameterError("preset '" + std::string(name) + "': bad qubit count");
    return n;
  };
  if (name == "example1") return schmidt3(example1_params());
  if (name == "bell") return bell();
  if (name.starts_with("ghz:")) return ghz(qubit_suffix("ghz:"));
  if (name.starts_with("w:")) return w_state(qubit_suffix("w:"));
  throw ParameterError("unknown preset '" + std::string(name) +
                       "' (expected example1, bell, ghz:N or w:N)");
}

}  // namespace entmono
