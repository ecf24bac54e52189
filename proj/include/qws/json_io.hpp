#pragma once

#include <string>

#include "qws/codes.hpp"

namespace qws {

/// Circuit document: {"n": ..., "moments": [[{"kind": ..., "qubits": [...]}]],
/// "roles": [[tag per qubit] per moment boundary]}. Code circuits add
/// "family", "logicals", and "layout" blocks.
std::string circuit_to_json(const Circuit& c);
std::string code_circuit_to_json(const CodeCircuit& code);

Circuit circuit_from_json(const std::string& text);

} // namespace qws
