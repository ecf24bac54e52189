#include "qws/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qws {

namespace {
inline void check_range(uint32_t q, uint32_t n) {
    if (q >= n) throw std::out_of_range("Tableau: qubit index out of range");
}
} // namespace

Tableau::Tableau(uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Tableau: need at least one qubit");
    rw_ = (2 * n + 63) / 64;
    xcol_.assign(n, std::vector<uint64_t>(rw_, 0));
    zcol_.assign(n, std::vector<uint64_t>(rw_, 0));
    r_.assign(rw_, 0);
    // Destabilizer k = X_k, stabilizer k = Z_k.
    for (uint32_t q = 0; q < n; ++q) {
        xcol_[q][q >> 6] |= 1ULL << (q & 63);
        uint32_t s = q + n;
        zcol_[q][s >> 6] |= 1ULL << (s & 63);
    }
}

void Tableau::apply_h(uint32_t q) {
    check_range(q, n_);
    auto& x = xcol_[q];
    auto& z = zcol_[q];
    for (uint32_t w = 0; w < rw_; ++w) {
        r_[w] ^= x[w] & z[w];
        std::swap(x[w], z[w]);
    }
}

void Tableau::apply_s(uint32_t q) {
    check_range(q, n_);
    auto& x = xcol_[q];
    auto& z = zcol_[q];
    for (uint32_t w = 0; w < rw_; ++w) {
        r_[w] ^= x[w] & z[w];
        z[w] ^= x[w];
    }
}

void Tableau::apply_x(uint32_t q) {
    check_range(q, n_);
    for (uint32_t w = 0; w < rw_; ++w) r_[w] ^= zcol_[q][w];
}

void Tableau::apply_y(uint32_t q) {
    check_range(q, n_);
    for (uint32_t w = 0; w < rw_; ++w) r_[w] ^= xcol_[q][w] ^ zcol_[q][w];
}

void Tableau::apply_z(uint32_t q) {
    check_range(q, n_);
    for (uint32_t w = 0; w < rw_; ++w) r_[w] ^= xcol_[q][w];
}

void Tableau::apply_cnot(uint32_t c, uint32_t t) {
    check_range(c, n_);
    check_range(t, n_);
    if (c == t) throw std::invalid_argument("Tableau: CNOT qubits must be distinct");
    auto& xc = xcol_[c];
    auto& zc = zcol_[c];
    auto& xt = xcol_[t];
    auto& zt = zcol_[t];
    for (uint32_t w = 0; w < rw_; ++w) {
        r_[w] ^= xc[w] & zt[w] & ~(xt[w] ^ zc[w]);
        xt[w] ^= xc[w];
        zc[w] ^= zt[w];
    }
}

void Tableau::apply_swap(uint32_t a, uint32_t b) {
    check_range(a, n_);
    check_range(b, n_);
    if (a == b) throw std::invalid_argument("Tableau: SWAP qubits must be distinct");
    std::swap(xcol_[a], xcol_[b]);
    std::swap(zcol_[a], zcol_[b]);
}

void Tableau::apply_cnotswap(uint32_t c, uint32_t t) {
    apply_cnot(c, t);
    apply_swap(c, t);
}

void Tableau::apply_iswap(uint32_t a, uint32_t b) {
    // iSWAP = SWAP * CZ * (S x S); CZ realized as H(b) CNOT(a,b) H(b).
    apply_s(a);
    apply_s(b);
    apply_h(b);
    apply_cnot(a, b);
    apply_h(b);
    apply_swap(a, b);
}

void Tableau::apply(const GateOp& g, Rng* rng) {
    switch (g.kind) {
        case GateKind::H: apply_h(g.q0); return;
        case GateKind::S: apply_s(g.q0); return;
        case GateKind::X: apply_x(g.q0); return;
        case GateKind::Y: apply_y(g.q0); return;
        case GateKind::Z: apply_z(g.q0); return;
        case GateKind::CNOT: apply_cnot(g.q0, g.q1); return;
        case GateKind::SWAP: apply_swap(g.q0, g.q1); return;
        case GateKind::CNOTSWAP: apply_cnotswap(g.q0, g.q1); return;
        case GateKind::ISWAP: apply_iswap(g.q0, g.q1); return;
        case GateKind::MeasZ:
            if (!rng) throw std::invalid_argument("MeasZ needs an rng");
            measure_z(g.q0, *rng);
            return;
        case GateKind::ResetZ:
            if (!rng) throw std::invalid_argument("ResetZ needs an rng");
            reset(g.q0, Basis::Z, *rng);
            return;
        case GateKind::ResetX:
            if (!rng) throw std::invalid_argument("ResetX needs an rng");
            reset(g.q0, Basis::X, *rng);
            return;
    }
}

PauliString Tableau::extract_row(uint32_t row) const {
    PauliString p(n_);
    uint32_t ys = 0;
    for (uint32_t q = 0; q < n_; ++q) {
        bool xb = (xcol_[q][row >> 6] >> (row & 63)) & 1;
        bool zb = (zcol_[q][row >> 6] >> (row & 63)) & 1;
        if (xb) p.set_x(q, true);
        if (zb) p.set_z(q, true);
        if (xb && zb) ++ys;
    }
    // Row sign convention: generator = (-1)^r * product of Hermitian
    // single-qubit paulis, i.e. phase = ycount (+2 if r set).
    p.set_raw_phase(static_cast<uint8_t>((ys + (row_phase_is_minus(row) ? 2 : 0)) & 3));
    return p;
}

PauliString Tableau::stabilizer_row(uint32_t k) const {
    if (k >= n_) throw std::out_of_range("stabilizer_row");
    return extract_row(k + n_);
}

PauliString Tableau::destabilizer_row(uint32_t k) const {
    if (k >= n_) throw std::out_of_range("destabilizer_row");
    return extract_row(k);
}

void Tableau::row_mul(uint32_t dst, uint32_t src) {
    // generator[dst] <- generator[src] * generator[dst], accumulating the
    // Aaronson-Gottesman phase function over all qubits.
    int acc = 0; // sum of g contributions, mod 4 ( +1 / -1 per qubit )
    for (uint32_t q = 0; q < n_; ++q) {
        bool x1 = (xcol_[q][src >> 6] >> (src & 63)) & 1;
        bool z1 = (zcol_[q][src >> 6] >> (src & 63)) & 1;
        bool x2 = (xcol_[q][dst >> 6] >> (dst & 63)) & 1;
        bool z2 = (zcol_[q][dst >> 6] >> (dst & 63)) & 1;
        if (x1 && z1)
            acc += (z2 ? 1 : 0) - (x2 ? 1 : 0); // Y * {I,X,Z,Y}
        else if (x1)
            acc += z2 ? (x2 ? 1 : -1) : 0; // X * {Z -> -1 via XZ? see g}
        else if (z1)
            acc += x2 ? (z2 ? -1 : 1) : 0;
        uint64_t m = 1ULL << (dst & 63);
        if (x1) xcol_[q][dst >> 6] ^= m;
        if (z1) zcol_[q][dst >> 6] ^= m;
    }
    int total = ((acc % 4) + 4) % 4;
    total = (total + 2 * row_phase_is_minus(dst) + 2 * row_phase_is_minus(src)) % 4;
    // For commuting products this is 0 or 2.
    uint64_t m = 1ULL << (dst & 63);
    if (total == 2)
        r_[dst >> 6] |= m;
    else
        r_[dst >> 6] &= ~m;
}

MeasurementRecord Tableau::measure_z(uint32_t q, Rng& rng) {
    check_range(q, n_);
    // Find a stabilizer row with an X component on q.
    const auto& xc = xcol_[q];
    int pivot = -1;
    for (uint32_t row = n_; row < 2 * n_; ++row) {
        if ((xc[row >> 6] >> (row & 63)) & 1) {
            pivot = static_cast<int>(row);
            break;
        }
    }
    if (pivot >= 0) {
        uint32_t p = static_cast<uint32_t>(pivot);
        for (uint32_t row = 0; row < 2 * n_; ++row) {
            if (row != p && ((xc[row >> 6] >> (row & 63)) & 1)) row_mul(row, p);
        }
        // Destabilizer slot takes the old stabilizer row; stabilizer row
        // becomes +-Z_q with a fresh coin.
        uint32_t d = p - n_;
        for (uint32_t q2 = 0; q2 < n_; ++q2) {
            uint64_t md = 1ULL << (d & 63), mp = 1ULL << (p & 63);
            bool xb = (xcol_[q2][p >> 6] >> (p & 63)) & 1;
            bool zb = (zcol_[q2][p >> 6] >> (p & 63)) & 1;
            xcol_[q2][d >> 6] = (xcol_[q2][d >> 6] & ~md) | (xb ? md : 0);
            zcol_[q2][d >> 6] = (zcol_[q2][d >> 6] & ~md) | (zb ? md : 0);
            xcol_[q2][p >> 6] &= ~mp;
            zcol_[q2][p >> 6] &= ~mp;
        }
        uint64_t md = 1ULL << (d & 63), mp = 1ULL << (p & 63);
        r_[d >> 6] = (r_[d >> 6] & ~md) | (row_phase_is_minus(p) ? md : 0);
        zcol_[q][p >> 6] |= mp;
        int outcome = rng.next_bool() ? 1 : 0;
        if (outcome)
            r_[p >> 6] |= mp;
        else
            r_[p >> 6] &= ~mp;
        return {static_cast<int>(q), outcome, false};
    }
    // Deterministic: accumulate stabilizer partners of destabilizers that
    // have X on q into a scratch row appended past the tableau.
    // We emulate the scratch row with a PauliString product.
    PauliString scratch(n_);
    bool first = true;
    for (uint32_t k = 0; k < n_; ++k) {
        if ((xc[k >> 6] >> (k & 63)) & 1) {
            PauliString row = stabilizer_row(k);
            scratch = first ? row : scratch * row;
            first = false;
        }
    }
    int outcome = (!first && scratch.sign() == -1) ? 1 : 0;
    return {static_cast<int>(q), outcome, true};
}

MeasurementRecord Tableau::measure_x(uint32_t q, Rng& rng) {
    apply_h(q);
    MeasurementRecord rec = measure_z(q, rng);
    apply_h(q);
    return rec;
}

void Tableau::reset(uint32_t q, Basis basis, Rng& rng) {
    if (basis == Basis::Z) {
        MeasurementRecord rec = measure_z(q, rng);
        if (rec.outcome) apply_x(q);
    } else {
        MeasurementRecord rec = measure_x(q, rng);
        if (rec.outcome) apply_z(q);
    }
}

void Tableau::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    if (p.sign() == -1) {
        // A global -1 has no observable effect on a state.
    }
    for (uint32_t q = 0; q < n_; ++q) {
        int pq = p.pauli_at(q);
        if (pq == 0) continue;
        for (uint32_t w = 0; w < rw_; ++w) {
            uint64_t anti = 0;
            if (pq == 1) anti = zcol_[q][w];      // X anticommutes with Z,Y rows
            else if (pq == 2) anti = xcol_[q][w]; // Z anticommutes with X,Y rows
            else anti = xcol_[q][w] ^ zcol_[q][w];
            r_[w] ^= anti;
        }
    }
}

std::optional<int> Tableau::expectation(const PauliString& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("expectation: size mismatch");
    // p is determined iff it commutes with every stabilizer; reconstruct
    // its sign by Gaussian elimination over the stabilizer group.
    std::vector<PauliString> gens;
    gens.reserve(n_);
    for (uint32_t k = 0; k < n_; ++k) gens.push_back(stabilizer_row(k));
    for (const auto& g : gens)
        if (!p.commutes_with(g)) return std::nullopt;
    // Reduce p over the generators: find a combination with equal masks.
    PauliString acc(n_);
    PauliString target = p;
    std::vector<PauliString> work = gens;
    uint32_t row = 0;
    for (uint32_t q = 0; q < n_ && row < work.size(); ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            auto has = [&](const PauliString& s) { return bit == 0 ? s.x_bit(q) : s.z_bit(q); };
            uint32_t piv = row;
            while (piv < work.size() && !has(work[piv])) ++piv;
            if (piv == work.size()) continue;
            std::swap(work[row], work[piv]);
            for (uint32_t j = 0; j < work.size(); ++j)
                if (j != row && has(work[j])) work[j] = work[j] * work[row];
            if (has(target)) {
                acc = acc.num_qubits() ? acc * work[row] : work[row];
                target = target * work[row];
            }
            ++row;
        }
    }
    if (target.weight() != 0) return std::nullopt; // not in the group's span
    // p = (sign) * acc with equal masks; compare signs.
    return p.sign() * acc.sign();
}

bool Tableau::validate() const {
    std::vector<PauliString> stab, destab;
    for (uint32_t k = 0; k < n_; ++k) {
        stab.push_back(stabilizer_row(k));
        destab.push_back(destabilizer_row(k));
    }
    for (uint32_t i = 0; i < n_; ++i) {
        for (uint32_t j = 0; j < n_; ++j) {
            if (!stab[i].commutes_with(stab[j])) return false;
            if (!destab[i].commutes_with(destab[j])) return false;
            bool anti = !destab[i].commutes_with(stab[j]);
            if (anti != (i == j)) return false;
        }
    }
    // Full rank over GF(2): eliminate stabilizer masks.
    std::vector<PauliString> work = stab;
    uint32_t rank = 0;
    for (uint32_t q = 0; q < n_ && rank < work.size(); ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            auto has = [&](const PauliString& s) { return bit == 0 ? s.x_bit(q) : s.z_bit(q); };
            uint32_t piv = rank;
            while (piv < work.size() && !has(work[piv])) ++piv;
            if (piv == work.size()) continue;
            std::swap(work[rank], work[piv]);
            for (uint32_t j = 0; j < work.size(); ++j)
                if (j != rank && has(work[j])) work[j] = work[j] * work[rank];
            ++rank;
        }
    }
    return rank == n_;
}

bool Tableau::in_codespace(const std::vector<PauliString>& stabilizers) const {
    for (const auto& s : stabilizers) {
        auto e = expectation(s);
        if (!e || *e != +1) return false;
    }
    return true;
}

std::vector<PauliString> canonical_stabilizers(const Tableau& t) {
    std::vector<PauliString> work;
    for (uint32_t k = 0; k < t.num_qubits(); ++k) work.push_back(t.stabilizer_row(k));
    uint32_t n = t.num_qubits();
    uint32_t row = 0;
    for (uint32_t q = 0; q < n && row < work.size(); ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            auto has = [&](const PauliString& s) { return bit == 0 ? s.x_bit(q) : s.z_bit(q); };
            uint32_t piv = row;
            while (piv < work.size() && !has(work[piv])) ++piv;
            if (piv == work.size()) continue;
            std::swap(work[row], work[piv]);
            for (uint32_t j = 0; j < work.size(); ++j)
                if (j != row && has(work[j])) work[j] = work[j] * work[row];
            ++row;
        }
    }
    return work;
}

bool stabilizer_groups_equal(const Tableau& a, const Tableau& b, const std::vector<uint32_t>& perm) {
    if (a.num_qubits() != b.num_qubits()) return false;
    uint32_t n = a.num_qubits();
    if (perm.size() != n) throw std::invalid_argument("relabel permutation has wrong size");
    std::vector<bool> seen(n, false);
    for (uint32_t q : perm) {
        if (q >= n || seen[q]) throw std::invalid_argument("invalid relabel permutation");
        seen[q] = true;
    }
    // Relabeled copy of b's generators.
    std::vector<PauliString> bg;
    for (uint32_t k = 0; k < n; ++k) {
        PauliString src = b.stabilizer_row(k);
        PauliString dst(n);
        for (uint32_t q = 0; q < n; ++q) {
            int p = src.pauli_at(q);
            if (p) dst.set_pauli(perm[q], p);
        }
        dst.set_sign(src.sign());
        bg.push_back(dst);
    }
    // Canonicalize both sets and compare.
    auto canon = [n](std::vector<PauliString> work) {
        uint32_t row = 0;
        for (uint32_t q = 0; q < n && row < work.size(); ++q) {
            for (int bit = 0; bit < 2; ++bit) {
                auto has = [&](const PauliString& s) { return bit == 0 ? s.x_bit(q) : s.z_bit(q); };
                uint32_t piv = row;
                while (piv < work.size() && !has(work[piv])) ++piv;
                if (piv == work.size()) continue;
                std::swap(work[row], work[piv]);
                for (uint32_t j = 0; j < work.size(); ++j)
                    if (j != row && has(work[j])) work[j] = work[j] * work[row];
                ++row;
            }
        }
        return work;
    };
    auto ca = canonical_stabilizers(a);
    auto cb = canon(std::move(bg));
    return ca == cb;
}

bool stabilizer_groups_equal(const Tableau& a, const Tableau& b) {
    std::vector<uint32_t> id(a.num_qubits());
    for (uint32_t q = 0; q < id.size(); ++q) id[q] = q;
    return stabilizer_groups_equal(a, b, id);
}

void randomize_state(Tableau& t, Rng& rng, uint32_t gate_count) {
    std::vector<uint32_t> all(t.num_qubits());
    for (uint32_t q = 0; q < all.size(); ++q) all[q] = q;
    randomize_state_subset(t, all, rng, gate_count);
}

void randomize_state_subset(Tableau& t, const std::vector<uint32_t>& qubits, Rng& rng,
                            uint32_t gate_count) {
    uint32_t n = static_cast<uint32_t>(qubits.size());
    if (n == 0) return;
    if (gate_count == 0) gate_count = 3 * n * n + 8;
    for (uint32_t i = 0; i < gate_count; ++i) {
        uint32_t pick = static_cast<uint32_t>(rng.next_below(n > 1 ? 5 : 3));
        uint32_t ia = static_cast<uint32_t>(rng.next_below(n));
        uint32_t a = qubits[ia];
        switch (pick) {
            case 0: t.apply_h(a); break;
            case 1: t.apply_s(a); break;
            case 2: t.apply_x(a); break;
            case 3:
            case 4: {
                uint32_t ib = (ia + 1 + static_cast<uint32_t>(rng.next_below(n - 1))) % n;
                t.apply_cnot(a, qubits[ib]);
                break;
            }
        }
    }
}

} // namespace qws
