#include "qws/noise.hpp"

#include <stdexcept>

namespace qws {

std::vector<NoiseLocation> enumerate_noise_locations(const Circuit& c) {
    std::vector<NoiseLocation> locs;
    uint32_t n = c.num_qubits();
    std::vector<char> touched(n);
    for (uint32_t mi = 0; mi < c.moments().size(); ++mi) {
        const Moment& m = c.moments()[mi];
        std::fill(touched.begin(), touched.end(), 0);
        // Pre-moment locations first (noise before measurements).
        for (const auto& op : m.ops) {
            if (op.kind == GateKind::MeasZ)
                locs.push_back({mi, NoiseLocKind::BeforeMeas, op.q0, -1});
        }
        for (const auto& op : m.ops) {
            touched[op.q0] = 1;
            if (op.q1 >= 0) touched[op.q1] = 1;
            switch (op.kind) {
                case GateKind::CNOTSWAP:
                case GateKind::CNOT:
                case GateKind::SWAP:
                case GateKind::ISWAP:
                    locs.push_back({mi, NoiseLocKind::AfterGate, op.q0, op.q1});
                    break;
                case GateKind::ResetZ:
                case GateKind::ResetX:
                    locs.push_back({mi, NoiseLocKind::AfterInit, op.q0, -1});
                    break;
                case GateKind::H: locs.push_back({mi, NoiseLocKind::AfterH, op.q0, -1}); break;
                default: break;
            }
        }
        for (uint32_t q = 0; q < n; ++q)
            if (!touched[q]) locs.push_back({mi, NoiseLocKind::Idle, static_cast<int>(q), -1});
    }
    return locs;
}

void sample_noise(const std::vector<NoiseLocation>& locs, const NoiseModel& m, Rng& rng,
                  std::vector<SampledError>& out) {
    for (uint32_t i = 0; i < locs.size(); ++i) {
        if (locs[i].kind == NoiseLocKind::AfterGate) {
            if (m.p2 <= 0) continue;
            if (rng.next_double() < m.p2) {
                // One of the fifteen non-identity two-qubit Paulis.
                uint64_t k = rng.next_below(15) + 1;
                out.push_back({i, static_cast<uint8_t>(k & 3), static_cast<uint8_t>(k >> 2)});
            }
        } else {
            if (m.p1 <= 0) continue;
            if (rng.next_double() < m.p1) {
                uint64_t k = rng.next_below(3) + 1;
                out.push_back({i, static_cast<uint8_t>(k), 0});
            }
        }
    }
}

bool PauliTracker::is_identity() const {
    for (size_t i = 0; i < x_.size(); ++i)
        if (x_[i] | z_[i]) return false;
    return true;
}

void PauliTracker::set_x(uint32_t q, bool v) {
    uint64_t m = 1ULL << (q & 63);
    if (v)
        x_[q >> 6] |= m;
    else
        x_[q >> 6] &= ~m;
}

void PauliTracker::set_z(uint32_t q, bool v) {
    uint64_t m = 1ULL << (q & 63);
    if (v)
        z_[q >> 6] |= m;
    else
        z_[q >> 6] &= ~m;
}

void PauliTracker::inject(uint32_t q, uint8_t pauli) {
    if (q >= n_) throw std::out_of_range("PauliTracker::inject");
    if (pauli & 1) set_x(q, !x_bit(q));
    if (pauli & 2) set_z(q, !z_bit(q));
}

bool PauliTracker::apply(const GateOp& op) {
    uint32_t a = static_cast<uint32_t>(op.q0);
    uint32_t b = op.q1 >= 0 ? static_cast<uint32_t>(op.q1) : 0;
    switch (op.kind) {
        case GateKind::H: {
            bool x = x_bit(a), z = z_bit(a);
            set_x(a, z);
            set_z(a, x);
            return false;
        }
        case GateKind::S: {
            // X -> Y, Z -> Z.
            set_z(a, z_bit(a) ^ x_bit(a));
            return false;
        }
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: return false;
        case GateKind::CNOT: {
            set_x(b, x_bit(b) ^ x_bit(a));
            set_z(a, z_bit(a) ^ z_bit(b));
            return false;
        }
        case GateKind::SWAP: {
            bool xa = x_bit(a), za = z_bit(a), xb = x_bit(b), zb = z_bit(b);
            set_x(a, xb);
            set_z(a, zb);
            set_x(b, xa);
            set_z(b, za);
            return false;
        }
        case GateKind::CNOTSWAP: {
            // X_c -> X_c X_t, X_t -> X_c, Z_c -> Z_t, Z_t -> Z_c Z_t.
            bool xa = x_bit(a), za = z_bit(a), xb = x_bit(b), zb = z_bit(b);
            set_x(a, xa ^ xb);
            set_x(b, xa);
            set_z(a, zb);
            set_z(b, za ^ zb);
            return false;
        }
        case GateKind::ISWAP: {
            apply(GateOp(GateKind::S, op.q0));
            apply(GateOp(GateKind::S, op.q1));
            apply(GateOp(GateKind::H, op.q1));
            apply(GateOp(GateKind::CNOT, op.q0, op.q1));
            apply(GateOp(GateKind::H, op.q1));
            apply(GateOp(GateKind::SWAP, op.q0, op.q1));
            return false;
        }
        case GateKind::MeasZ: return x_bit(a);
        case GateKind::ResetZ:
        case GateKind::ResetX: {
            set_x(a, false);
            set_z(a, false);
            return false;
        }
    }
    return false;
}

PauliString PauliTracker::restrict_to(const std::vector<uint32_t>& qubits) const {
    PauliString p(static_cast<uint32_t>(qubits.size()));
    for (uint32_t i = 0; i < qubits.size(); ++i) {
        int pq = (x_bit(qubits[i]) ? 1 : 0) | (z_bit(qubits[i]) ? 2 : 0);
        if (pq) p.set_pauli(i, pq);
    }
    return p;
}

} // namespace qws
