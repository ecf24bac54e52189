#include "qws/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace qws {

const char* check_name(CheckType t) { return t == CheckType::Z ? "Z" : "X"; }
const char* variant_name(Variant v) { return v == Variant::Cnot ? "cnot" : "cnotswap"; }

void append_check_rounds(Circuit& c, const std::vector<Face>& faces, int num_steps,
                         Variant variant) {
    for (int s = 0; s < num_steps; ++s) {
        Moment m;
        auto pos = c.pos_of_entity(c.num_boundaries() - 1);
        for (const auto& f : faces) {
            for (size_t i = 0; i < f.slots.size(); ++i) {
                if (f.steps[i] != s) continue;
                int slot_pos = static_cast<int>(pos[f.slots[i]]);
                int anc_pos = static_cast<int>(pos[f.anc]);
                GateKind k = variant == Variant::Cnot ? GateKind::CNOT : GateKind::CNOTSWAP;
                if (f.type == CheckType::Z)
                    m.ops.push_back(GateOp(k, slot_pos, anc_pos));
                else
                    m.ops.push_back(GateOp(k, anc_pos, slot_pos));
            }
        }
        if (!m.ops.empty()) c.append(std::move(m));
    }
}

Circuit reversed_same_pairs(const Circuit& c) {
    if (c.contains_measurement())
        throw std::invalid_argument("reversed_same_pairs: circuit contains measurements");
    Circuit out(c.num_qubits(), c.initial_tags());
    out.set_initial_positions(c.final_entity_at());
    const auto& ms = c.moments();
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) out.append(*it);
    return out;
}

CodeCircuit build_parity_chain(uint32_t n_data, CheckType basis, Variant variant) {
    if (n_data < 2) throw std::invalid_argument("build_parity_chain: need at least 2 data qubits");
    uint32_t n = n_data + 1;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    tags[n_data] = RoleTag::Syndrome;

    Face f;
    f.type = basis;
    f.anc = n_data;
    for (uint32_t k = 0; k < n_data; ++k) {
        f.slots.push_back(k);
        f.steps.push_back(static_cast<int>(k));
    }

    CodeCircuit code;
    code.family = basis == CheckType::Z ? "parity-chain-z" : "parity-chain-x";
    code.variant = variant;
    code.circuit = Circuit(n, tags);
    code.faces = {f};
    for (uint32_t q = 0; q < n; ++q)
        code.positions.push_back({static_cast<double>(q), 0.0});
    for (uint32_t k = 0; k < n_data; ++k) code.data_slots.push_back(k);
    append_check_rounds(code.circuit, code.faces, static_cast<int>(n_data), variant);
    return code;
}

namespace {

// Data a..g = 0..6 with the Hamming-code face structure (g = 6 is the
// qubit in all three faces); syndrome A,B,C = 7,8,9. Slot orders chosen so
// the cnotswap Z-check ends with syndrome roles on {a, b, C}.
std::vector<Face> color7_faces(CheckType check) {
    std::vector<Face> faces;
    faces.push_back({check, 7, {0, 6, 2, 4}, {0, 1, 2, 3}});
    faces.push_back({check, 8, {6, 2, 5, 1}, {0, 1, 2, 3}});
    faces.push_back({check, 9, {4, 5, 3, 6}, {0, 1, 2, 3}});
    return faces;
}

std::vector<Vec2> color7_positions() {
    // Triangular arrangement; corners a,b,d, edge midpoints c,e,f, center g.
    return {{0.0, 0.0}, {4.0, 0.0}, {2.0, 0.0}, {2.0, 3.5}, {1.0, 1.75},
            {3.0, 1.75}, {2.0, 1.2}, {0.7, 0.7}, {3.3, 0.7}, {2.0, 2.4}};
}

} // namespace

CodeCircuit build_color7(Variant variant, CheckType check) {
    uint32_t n = 10;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    for (uint32_t q = 7; q < 10; ++q) tags[q] = RoleTag::Syndrome;

    CodeCircuit code;
    code.family = "color7";
    code.variant = variant;
    code.faces = color7_faces(check);
    code.positions = color7_positions();
    for (uint32_t k = 0; k < 7; ++k) code.data_slots.push_back(k);

    if (check == CheckType::Z) {
        code.circuit = Circuit(n, tags);
        append_check_rounds(code.circuit, code.faces, 4, variant);
    } else {
        // X-check reuses the Z-check connections in reverse order
        // (serial operation after a Z round).
        auto zfaces = color7_faces(CheckType::Z);
        Circuit z(n, tags);
        append_check_rounds(z, zfaces, 4, variant);
        if (variant == Variant::Cnotswap) {
            code.circuit = reversed_same_pairs(z);
        } else {
            // Static-qubit version: same reversed schedule, X direction.
            Circuit c(n, tags);
            std::vector<Face> rev = code.faces;
            for (auto& f : rev)
                for (auto& s : f.steps) s = 3 - s;
            append_check_rounds(c, rev, 4, Variant::Cnot);
            code.circuit = std::move(c);
        }
    }
    return code;
}

CodeCircuit build_cat4() {
    uint32_t n = 5;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    tags[4] = RoleTag::Ancilla;
    CodeCircuit code;
    code.family = "cat4";
    code.circuit = Circuit(n, tags);
    for (uint32_t q = 0; q < n; ++q)
        code.positions.push_back({static_cast<double>(q), 0.0});
    for (uint32_t k = 0; k < 4; ++k) code.data_slots.push_back(k);

    Circuit& c = code.circuit;
    c.append_gate(GateOp(GateKind::H, 0));
    c.append_gate(GateOp(GateKind::CNOTSWAP, 0, 1));
    c.append_gate(GateOp(GateKind::CNOTSWAP, 1, 2));
    c.append_gate(GateOp(GateKind::CNOTSWAP, 2, 3));
    c.append_gate(GateOp(GateKind::CNOTSWAP, 3, 4));
    c.append_gate(GateOp(GateKind::CNOTSWAP, 4, 3));
    return code;
}

CutBlock synthesize_cut(uint32_t n, const std::vector<uint32_t>& path,
                        const std::vector<uint32_t>& ancillas) {
    if (path.size() < 2) throw std::invalid_argument("synthesize_cut: path shorter than 2");
    if (ancillas.size() + 2 != path.size())
        throw std::invalid_argument("synthesize_cut: need one ancilla per interior path qubit");
    for (uint32_t q : path)
        if (q >= n) throw std::out_of_range("synthesize_cut: path qubit out of range");
    for (uint32_t a : ancillas)
        if (a >= n) throw std::out_of_range("synthesize_cut: ancilla out of range");

    CutBlock block;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    block.circuit = Circuit(n, tags);
    Circuit& c = block.circuit;
    size_t k = ancillas.size();
    auto cs = [](uint32_t a, uint32_t b) {
        return GateOp(GateKind::CNOTSWAP, static_cast<int>(a), static_cast<int>(b));
    };
    int gates = 0;

    if (k == 0) {
        c.append_gate(cs(path[0], path[1]));
        block.stages = 1;
        block.gate_count = 1;
        return block;
    }

    // An interior can be its own ancilla: it is then a fresh |0> qubit the
    // relay runs through directly (the rotated-code cut), and the bank and
    // restore stages have nothing to do for it.
    // Stage 1: bank occupied interior states into the ancillas.
    {
        Moment m;
        for (size_t i = 0; i < k; ++i)
            if (ancillas[i] != path[i + 1]) m.ops.push_back(cs(ancillas[i], path[i + 1]));
        gates += static_cast<int>(m.ops.size());
        if (!m.ops.empty()) c.append(std::move(m));
    }
    // Stage 2: relay the far endpoint's state up to the first interior.
    for (size_t i = k; i >= 1; --i) c.append_gate(cs(path[i], path[i + 1])), ++gates;
    // Stage 3: couple the endpoints through the adjacent interior.
    c.append_gate(cs(path[0], path[1]));
    ++gates;
    // Stage 4: relay the near endpoint's old state down to the far end.
    for (size_t i = 1; i <= k; ++i) c.append_gate(cs(path[i + 1], path[i])), ++gates;
    // Stage 5: restore the interior states.
    {
        Moment m;
        for (size_t i = 0; i < k; ++i)
            if (ancillas[i] != path[i + 1]) m.ops.push_back(cs(path[i + 1], ancillas[i]));
        gates += static_cast<int>(m.ops.size());
        if (!m.ops.empty()) c.append(std::move(m));
    }
    block.stages = 5;
    block.gate_count = gates;
    return block;
}

CodeCircuit build_color7_ft(bool cut) {
    // 7 data (0-6) + cat blocks A = 7..10, B = 11..14, C = 15..18; with the
    // cut, relay ancillas 19..21 bank the A3, B4, C1 positions.
    uint32_t n = cut ? 22 : 19;
    std::vector<RoleTag> tags(n, RoleTag::Data);
    for (uint32_t q = 7; q < 19; ++q) tags[q] = RoleTag::Syndrome;
    for (uint32_t q = 19; q < n; ++q) tags[q] = RoleTag::Ancilla;

    CodeCircuit code;
    code.family = cut ? "color7-ft-cut" : "color7-ft";
    code.circuit = Circuit(n, tags);
    for (uint32_t k = 0; k < 7; ++k) code.data_slots.push_back(k);
    if (cut) code.cut_ancillas = {19, 20, 21};

    // Faces record which data slot meets which cat position (step = the
    // face's interaction moment).
    code.faces.push_back({CheckType::Z, 7, {0, 2, 4, 6}, {0, 0, 0, 0}});
    code.faces.push_back({CheckType::Z, 15, {3, 4, 5, 6}, {1, 1, 1, 1}});
    code.faces.push_back({CheckType::Z, 11, {1, 2, 5, 6}, {2, 2, 2, 2}});

    Circuit& c = code.circuit;
    auto cs = [](uint32_t a, uint32_t b) {
        return GateOp(GateKind::CNOTSWAP, static_cast<int>(a), static_cast<int>(b));
    };

    // Cat preparation in every block (H then a CNOT+SWAP ladder).
    {
        Moment m;
        for (uint32_t b : {7u, 11u, 15u}) m.ops.push_back(GateOp(GateKind::H, static_cast<int>(b)));
        c.append(std::move(m));
    }
    for (int step = 0; step < 3; ++step) {
        Moment m;
        for (uint32_t b : {7u, 11u, 15u})
            m.ops.push_back(cs(b + static_cast<uint32_t>(step), b + static_cast<uint32_t>(step) + 1));
        c.append(std::move(m));
    }

    // Face interactions, one face per moment: A, then C, then B. Gates are
    // fixed position pairs (the role flow determines them; see tests).
    c.append(Moment{{cs(0, 7), cs(2, 8), cs(4, 9), cs(6, 10)}});
    if (!cut) {
        c.append(Moment{{cs(3, 15), cs(9, 16), cs(5, 17), cs(10, 18)}});
    } else {
        c.append(Moment{{cs(3, 15), cs(9, 16), cs(5, 17)}});
        // Relay ancillas are freshly zeroed, then the A4-C4 connection is
        // replaced by the A4-A3-B4-C1-C4 relay.
        Moment rz;
        for (uint32_t a : {19u, 20u, 21u}) rz.ops.push_back(GateOp(GateKind::ResetZ, static_cast<int>(a)));
        c.append(std::move(rz));
        CutBlock relay = synthesize_cut(n, {10, 9, 14, 15, 18}, {19, 20, 21});
        for (const auto& m : relay.circuit.moments()) c.append(m);
    }
    c.append(Moment{{cs(1, 11), cs(8, 12), cs(17, 13), cs(18, 14)}});

    // Rough drawing coordinates: data triangle with cat blocks along the
    // sides (used for documentation output only).
    code.positions.assign(n, {0, 0});
    auto cp = color7_positions();
    for (uint32_t q = 0; q < 7; ++q) code.positions[q] = cp[q];
    for (int i = 0; i < 4; ++i) {
        code.positions[7 + i] = {-1.0 + 0.5 * i, 0.6 + 0.45 * i};
        code.positions[11 + i] = {5.0 - 0.5 * i, 0.6 + 0.45 * i};
        code.positions[15 + i] = {1.25 + 0.5 * i, 3.2};
    }
    for (uint32_t q = 19; q < n; ++q)
        code.positions[q] = {1.0 + 0.8 * (q - 19), 4.0};
    return code;
}

Circuit cnotswap_via_iswap() {
    // One iSWAP dressed with single-qubit rotations equals CNOT+SWAP
    // (control 0, target 1) up to global phase.
    Circuit c(2);
    c.append_gate(GateOp(GateKind::H, 1));
    c.append_gate(GateOp(GateKind::ISWAP, 0, 1));
    c.append(Moment{{GateOp(GateKind::S, 0), GateOp(GateKind::S, 1)}});
    c.append(Moment{{GateOp(GateKind::H, 0), GateOp(GateKind::Z, 1)}});
    c.append_gate(GateOp(GateKind::X, 0));
    return c;
}

std::vector<uint32_t> syndrome_work_set(const CodeCircuit& odd_round) {
    const Circuit& c = odd_round.circuit;
    std::vector<uint32_t> set;
    auto add = [&](uint32_t p) {
        if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(p);
    };
    auto final_pos = c.pos_of_entity(c.num_boundaries() - 1);
    for (const auto& f : odd_round.faces) {
        add(final_pos[f.anc]); // measured at the odd round's end
        add(f.anc);            // measured at home after the even round
    }
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace qws
