#include "qws/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qws {

const char* role_name(RoleTag t) {
    switch (t) {
        case RoleTag::Data: return "data";
        case RoleTag::Syndrome: return "syndrome";
        case RoleTag::Ancilla: return "ancilla";
    }
    return "?";
}

RoleTag role_from_name(const std::string& s) {
    if (s == "data") return RoleTag::Data;
    if (s == "syndrome") return RoleTag::Syndrome;
    if (s == "ancilla") return RoleTag::Ancilla;
    throw std::invalid_argument("unknown role tag: " + s);
}

GateKind gate_from_name(const std::string& name) {
    static const GateKind kinds[] = {GateKind::H,        GateKind::S,     GateKind::X,
                                     GateKind::Y,        GateKind::Z,     GateKind::CNOT,
                                     GateKind::SWAP,     GateKind::CNOTSWAP, GateKind::ISWAP,
                                     GateKind::MeasZ,    GateKind::ResetZ, GateKind::ResetX};
    for (GateKind k : kinds)
        if (name == gate_name(k)) return k;
    throw std::invalid_argument("unknown gate kind: " + name);
}

bool Moment::disjoint() const {
    std::vector<int> seen;
    for (const auto& op : ops) {
        seen.push_back(op.q0);
        if (op.q1 >= 0) seen.push_back(op.q1);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool Moment::touches(int q) const {
    for (const auto& op : ops)
        if (op.q0 == q || op.q1 == q) return true;
    return false;
}

Circuit::Circuit(uint32_t n, std::vector<RoleTag> initial_tags) : n_(n), tags_(std::move(initial_tags)) {
    if (tags_.size() != n) throw std::invalid_argument("Circuit: tag count != qubit count");
    std::vector<uint32_t> id(n);
    for (uint32_t q = 0; q < n; ++q) id[q] = q;
    boundaries_.push_back(std::move(id));
}

Circuit::Circuit(uint32_t n) : Circuit(n, std::vector<RoleTag>(n, RoleTag::Data)) {}

void Circuit::set_initial_positions(std::vector<uint32_t> entity_at_pos) {
    if (!moments_.empty()) throw std::logic_error("set_initial_positions: circuit not empty");
    if (entity_at_pos.size() != n_) throw std::invalid_argument("bad initial positions");
    boundaries_.clear();
    boundaries_.push_back(std::move(entity_at_pos));
}

void Circuit::append(Moment m) {
    for (const auto& op : m.ops) {
        if (op.q0 < 0 || op.q0 >= static_cast<int>(n_) ||
            (op.q1 >= 0 && op.q1 >= static_cast<int>(n_)))
            throw std::out_of_range("Circuit: gate qubit out of range");
    }
    if (!m.disjoint()) throw std::invalid_argument("Circuit: moment supports overlap");
    std::vector<uint32_t> next = boundaries_.back();
    for (const auto& op : m.ops) {
        switch (op.kind) {
            case GateKind::SWAP:
            case GateKind::CNOTSWAP:
            case GateKind::ISWAP: std::swap(next[op.q0], next[op.q1]); break;
            default: break;
        }
    }
    moments_.push_back(std::move(m));
    boundaries_.push_back(std::move(next));
}

const std::vector<uint32_t>& Circuit::entity_at(uint32_t boundary) const {
    if (boundary >= boundaries_.size()) throw std::out_of_range("entity_at: bad boundary");
    return boundaries_[boundary];
}

std::vector<uint32_t> Circuit::pos_of_entity(uint32_t boundary) const {
    const auto& ent = entity_at(boundary);
    std::vector<uint32_t> pos(n_);
    for (uint32_t p = 0; p < n_; ++p) pos[ent[p]] = p;
    return pos;
}

RoleTag Circuit::tag_at(uint32_t boundary, uint32_t pos) const {
    return tags_[entity_at(boundary)[pos]];
}

bool Circuit::contains_measurement() const {
    for (const auto& m : moments_)
        for (const auto& op : m.ops)
            if (op.kind == GateKind::MeasZ) return true;
    return false;
}

bool Circuit::operator==(const Circuit& other) const {
    return n_ == other.n_ && moments_.size() == other.moments_.size() &&
           std::equal(moments_.begin(), moments_.end(), other.moments_.begin(),
                      [](const Moment& a, const Moment& b) { return a.ops == b.ops; }) &&
           tags_ == other.tags_ && boundaries_.front() == other.boundaries_.front();
}

Circuit reverse_schedule(const Circuit& c) {
    if (c.contains_measurement())
        throw std::invalid_argument("reverse_schedule: circuit contains measurement moments");
    Circuit out(c.num_qubits(), c.initial_tags());
    out.set_initial_positions(c.final_entity_at());
    const auto& ms = c.moments();
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
        Moment m;
        for (const auto& op : it->ops) {
            if (is_two_qubit(op.kind))
                m.ops.push_back(GateOp(op.kind, op.q1, op.q0));
            else
                m.ops.push_back(op);
        }
        out.append(std::move(m));
    }
    return out;
}

} // namespace qws
