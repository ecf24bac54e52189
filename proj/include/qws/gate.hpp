#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qws {

enum class GateKind : uint8_t {
    H,
    S,
    X,
    Y,
    Z,
    CNOT,
    SWAP,
    CNOTSWAP,
    ISWAP,
    MeasZ,
    ResetZ,
    ResetX,
};

inline bool is_two_qubit(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::SWAP:
        case GateKind::CNOTSWAP:
        case GateKind::ISWAP: return true;
        default: return false;
    }
}

inline bool is_unitary(GateKind k) {
    return k != GateKind::MeasZ && k != GateKind::ResetZ && k != GateKind::ResetX;
}

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::CNOTSWAP: return "CNOTSWAP";
        case GateKind::ISWAP: return "ISWAP";
        case GateKind::MeasZ: return "MeasZ";
        case GateKind::ResetZ: return "ResetZ";
        case GateKind::ResetX: return "ResetX";
    }
    return "?";
}

GateKind gate_from_name(const std::string& name);

/// One gate application. For two-qubit gates q0 is the control (or the
/// first qubit of a symmetric gate) and q1 the target; single-qubit
/// operations leave q1 negative.
struct GateOp {
    GateKind kind;
    int q0;
    int q1;

    GateOp(GateKind k, int a) : kind(k), q0(a), q1(-1) {
        if (is_two_qubit(k)) throw std::invalid_argument("two-qubit gate needs two qubits");
    }
    GateOp(GateKind k, int a, int b) : kind(k), q0(a), q1(b) {
        if (!is_two_qubit(k)) throw std::invalid_argument("single-qubit gate takes one qubit");
        if (a == b) throw std::invalid_argument("two-qubit gate qubits must be distinct");
    }

    bool operator==(const GateOp&) const = default;
};

} // namespace qws
