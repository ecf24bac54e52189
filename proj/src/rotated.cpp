#include "qws/codes.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace qws {

namespace {

enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

struct RotFace {
    CheckType type;
    uint32_t anc;
    // slot entity per corner; -1 where the face has no qubit (boundary).
    std::array<int, 4> corner;
};

// Data labels on the 3x3 grid:
//   1 2 3
//   4 5 6
//   7 8 0
// Z syndromes start at 9,11,14,16 and X syndromes at 10,12,13,15 (the
// published lookup tables fix these starting positions and the face
// incidence). Weight-2 checks sit on the boundary.
const std::array<RotFace, 8> kFaces = {{
    {CheckType::Z, 9, {-1, -1, 2, 3}},
    {CheckType::Z, 11, {1, 2, 4, 5}},
    {CheckType::Z, 14, {5, 6, 8, 0}},
    {CheckType::Z, 16, {7, 8, -1, -1}},
    {CheckType::X, 10, {-1, 1, -1, 4}},
    {CheckType::X, 12, {2, 3, 5, 6}},
    {CheckType::X, 13, {4, 5, 7, 8}},
    {CheckType::X, 15, {6, -1, 0, -1}},
}};

// Corner visit order per step. Valid schedules must keep each step's data
// slots distinct and, for every Z/X face pair sharing two qubits, order
// both shared collections the same way (otherwise one check randomizes
// the other). This pair also sends the face-14 collection of slot 0
// through the physical qubit-0 / qubit-14 connection, the one the cut
// technique replaces.
const std::array<Corner, 4> kZOrder = {SE, SW, NE, NW};
const std::array<Corner, 4> kXOrder = {SE, NE, SW, NW};

std::vector<Face> rotated_faces() {
    // Dev hook: "QWS_ROT_SCHEDULE" = 24 integers (slot@step per face in
    // kFaces order, slots in face order) overrides the built-in orders.
    if (const char* env = getenv("QWS_ROT_SCHEDULE")) {
        std::vector<int> vals;
        const char* p = env;
        while (*p) {
            char* end;
            long v = strtol(p, &end, 10);
            if (end == p) break;
            vals.push_back(static_cast<int>(v));
            p = end;
            while (*p == ',' || *p == ' ') ++p;
        }
        std::vector<Face> faces;
        size_t k = 0;
        for (const auto& rf : kFaces) {
            Face f;
            f.type = rf.type;
            f.anc = rf.anc;
            for (int c = 0; c < 4; ++c) {
                int slot = rf.corner[c];
                if (slot < 0) continue;
                f.slots.push_back(static_cast<uint32_t>(slot));
                f.steps.push_back(vals.at(k++));
            }
            faces.push_back(std::move(f));
        }
        return faces;
    }
    std::vector<Face> faces;
    for (const auto& rf : kFaces) {
        Face f;
        f.type = rf.type;
        f.anc = rf.anc;
        const auto& order = rf.type == CheckType::Z ? kZOrder : kXOrder;
        for (int s = 0; s < 4; ++s) {
            int slot = rf.corner[order[s]];
            if (slot < 0) continue;
            f.slots.push_back(static_cast<uint32_t>(slot));
            f.steps.push_back(s);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

std::vector<Vec2> rotated_positions(uint32_t n) {
    std::vector<Vec2> pos(n);
    auto put = [&](uint32_t q, double col, double row) { pos[q] = {col, row}; };
    put(1, 0, 0);
    put(2, 1, 0);
    put(3, 2, 0);
    put(4, 0, 1);
    put(5, 1, 1);
    put(6, 2, 1);
    put(7, 0, 2);
    put(8, 1, 2);
    put(0, 2, 2);
    put(9, 1.5, -1);
    put(11, 0.5, 0.5);
    put(14, 1.5, 1.5);
    put(16, 0.5, 3);
    put(10, -1, 0.5);
    put(12, 1.5, 0.5);
    put(13, 0.5, 1.5);
    put(15, 3, 1.5);
    if (n > 17) {
        put(17, 2.1, 2.1);
        put(18, 1.9, 1.9);
    }
    return pos;
}

} // namespace

CodeCircuit build_rotated_d3(Parity round_parity, bool cut) {
    uint32_t n = cut ? 19 : 17;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    for (uint32_t q : {9u, 10u, 11u, 12u, 13u, 14u, 15u, 16u}) tags[q] = RoleTag::Syndrome;
    if (cut) tags[17] = tags[18] = RoleTag::Ancilla;

    CodeCircuit code;
    code.family = "surface-rotated";
    code.faces = rotated_faces();
    code.positions = rotated_positions(n);
    for (uint32_t k = 0; k < 9; ++k) code.data_slots.push_back(k);
    if (cut) code.cut_ancillas = {17, 18};

    PauliString lz(n), lx(n);
    for (uint32_t q : {1u, 4u, 7u}) lz.set_pauli(q, 2);
    for (uint32_t q : {7u, 8u, 0u}) lx.set_pauli(q, 1);
    code.logical_z = lz;
    code.logical_x = lx;

    int num_steps = 0;
    for (const auto& f : code.faces)
        for (int s : f.steps) num_steps = std::max(num_steps, s + 1);
    Circuit full(n, tags);
    append_check_rounds(full, code.faces, num_steps, Variant::Cnotswap);
    const auto& ms = full.moments();

    if (!cut) {
        code.circuit = round_parity == Parity::Odd ? full : reverse_schedule(full);
        return code;
    }

    // The cut replaces the face-14 collection of data qubit 0 (their
    // syndrome and data roles interact once per round) with a relay
    // through the two ancillas.
    int cut_step = -1;
    for (const auto& f : code.faces)
        if (f.anc == 14)
            for (size_t i = 0; i < f.slots.size(); ++i)
                if (f.slots[i] == 0) cut_step = f.steps[i];
    if (cut_step < 0) throw std::logic_error("rotated cut: no face-14 slot-0 gate");
    auto pos_at = full.pos_of_entity(static_cast<uint32_t>(cut_step));
    int cu = static_cast<int>(pos_at[0]), cv = static_cast<int>(pos_at[14]);
    GateOp cut_gate(GateKind::CNOTSWAP, cu, cv);
    Moment depleted;
    bool found = false;
    for (const auto& op : ms[cut_step].ops) {
        if (op == cut_gate)
            found = true;
        else
            depleted.ops.push_back(op);
    }
    if (!found) throw std::logic_error("rotated cut: gate not found in its step");
    CutBlock relay = synthesize_cut(n, {static_cast<uint32_t>(cu), 17, 18,
                                        static_cast<uint32_t>(cv)},
                                    {17, 18});

    Circuit odd(n, tags);
    for (int k = 0; k < cut_step; ++k) odd.append(ms[k]);
    {
        // Ancilla initialization rides along with the depleted step.
        Moment d = depleted;
        d.ops.push_back(GateOp(GateKind::ResetZ, 17));
        d.ops.push_back(GateOp(GateKind::ResetZ, 18));
        odd.append(std::move(d));
    }
    for (const auto& m : relay.circuit.moments()) odd.append(m);
    for (uint32_t k = cut_step + 1; k < static_cast<uint32_t>(num_steps); ++k) odd.append(ms[k]);

    if (round_parity == Parity::Odd) {
        code.circuit = std::move(odd);
        return code;
    }

    // Even rounds reverse the order of the connections and the gate
    // directions; the relay reverses with them. Ancilla resets again sit
    // in the depleted step, which now follows the reversed relay.
    Circuit even(n, tags);
    even.set_initial_positions(odd.final_entity_at());
    Circuit fullrev = reverse_schedule(full);
    const auto& rms = fullrev.moments();
    int rev_cut = num_steps - 1 - cut_step;
    for (int k = 0; k < rev_cut; ++k) even.append(rms[k]);
    {
        Moment rz;
        rz.ops.push_back(GateOp(GateKind::ResetZ, 17));
        rz.ops.push_back(GateOp(GateKind::ResetZ, 18));
        even.append(std::move(rz));
    }
    Circuit relay_rev = reverse_schedule(relay.circuit);
    for (const auto& m : relay_rev.moments()) even.append(m);
    {
        Moment d;
        for (const auto& op : rms[rev_cut].ops)
            if (!(op.q0 == cut_gate.q1 && op.q1 == cut_gate.q0)) d.ops.push_back(op);
        even.append(std::move(d));
    }
    for (uint32_t k = rev_cut + 1; k < static_cast<uint32_t>(num_steps); ++k) even.append(rms[k]);
    code.circuit = std::move(even);
    return code;
}

} // namespace qws
