#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "entmono/statelab.hpp"

namespace entmono {

/// Parses a JSON state record: {"n_qubits": n, "amplitudes": [[re, im], ...]}
/// with 2^n amplitudes in computational-basis order. The squared norm must be
/// within 1e-9 of 1. Throws ParameterError on any schema or validation failure.
PureState parse_state_json(std::string_view text);
PureState load_state_file(const std::string& path);

/// Serializes in the same schema (12 significant digits).
std::string state_to_json(const PureState& s);

/// example1 | bell | ghz:N | w:N
PureState preset_state(std::string_view name);

}  // namespace entmono
