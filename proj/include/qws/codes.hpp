#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qws/circuit.hpp"
#include "qws/pauli.hpp"

namespace qws {

enum class CheckType : uint8_t { Z, X };
enum class Variant : uint8_t { Cnot, Cnotswap };
enum class Parity : uint8_t { Odd, Even };

const char* check_name(CheckType t);
const char* variant_name(Variant v);

struct Vec2 {
    double x = 0, y = 0;
};

/// One parity check: a syndrome entity plus the data entities it collects,
/// with the schedule step for each.
struct Face {
    CheckType type;
    uint32_t anc;                // entity id (home position) of the syndrome qubit
    std::vector<uint32_t> slots; // data entity ids
    std::vector<int> steps;      // schedule step per slot
};

/// Circuit plus the code metadata the analyzer, decoder and experiment
/// driver consume.
struct CodeCircuit {
    std::string family;
    Variant variant = Variant::Cnotswap;
    Circuit circuit; // gate-only schedule for one check round
    std::vector<Face> faces;
    std::vector<Vec2> positions;       // drawing coordinates per physical qubit
    std::vector<uint32_t> data_slots;  // entity ids tagged Data
    std::vector<uint32_t> cut_ancillas;
    std::optional<PauliString> logical_z, logical_x; // over entity ids

    uint32_t num_qubits() const { return circuit.num_qubits(); }
};

/// Generic role-tracked schedule builder: appends the step moments of the
/// given faces to `c` (Z checks: control = data slot, target = syndrome;
/// X checks: control = syndrome, target = data slot).
void append_check_rounds(Circuit& c, const std::vector<Face>& faces, int num_steps,
                         Variant variant);

/// Moments in reverse order keeping each gate's direction; this is the
/// serial X-after-Z schedule that reuses the same connections.
Circuit reversed_same_pairs(const Circuit& c);

/// 1D parity-check chain: n_data data qubits 0..n_data-1 plus the initial
/// syndrome qubit n_data. The cnotswap variant migrates the syndrome role
/// to the far end (qubit n_data-1).
CodeCircuit build_parity_chain(uint32_t n_data, CheckType basis,
                               Variant variant = Variant::Cnotswap);

/// 7-qubit color code: data a..g = 0..6 (g = 6 is the center), syndrome
/// qubits A,B,C = 7,8,9. The cnotswap Z-check ends with syndrome roles on
/// {a, b, C}; the X-check is the reversed-order circuit and restores
/// {A, B, C}.
CodeCircuit build_color7(Variant variant, CheckType check);

/// Five-qubit cat-state generator: (|0000>+|1111>)/sqrt(2) on qubits 0-3,
/// helper qubit 4 ends disentangled in |0>.
CodeCircuit build_cat4();

/// CNOT+SWAP relay replacing a direct CNOTSWAP(path.front(), path.back())
/// through interior path qubits whose states are banked in |0>-ancillas.
/// Stages: bank, forward relay, couple, backward relay, unbank.
struct CutBlock {
    Circuit circuit;
    int stages = 0;
    int gate_count = 0;
};
CutBlock synthesize_cut(uint32_t n, const std::vector<uint32_t>& path,
                        const std::vector<uint32_t>& ancillas);

/// Fault-tolerant 7-qubit color code Z-check with three 4-qubit cat-state
/// syndrome blocks (19 qubits; 22 with the cut relay ancillas).
CodeCircuit build_color7_ft(bool cut);

/// Standard distance-d surface code on a (2d-1) x (2d-1) grid.
CodeCircuit build_surface_standard(uint32_t d, Variant variant);

/// Rotated distance-3 surface code (17 qubits; 19 when cut). Odd rounds
/// run the forward schedule, even rounds the reversed one.
CodeCircuit build_rotated_d3(Parity round_parity, bool cut);

/// Physical qubits that hold a syndrome role at a measurement point over
/// one odd+even round cycle.
std::vector<uint32_t> syndrome_work_set(const CodeCircuit& odd_round);

/// CNOT+SWAP realized as one iSWAP dressed with single-qubit rotations,
/// on a two-qubit circuit (control 0, target 1).
Circuit cnotswap_via_iswap();

} // namespace qws
