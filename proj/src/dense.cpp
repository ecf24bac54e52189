#include "qws/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

namespace {
constexpr cplx I{0.0, 1.0};
} // namespace

DenseState::DenseState(uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("DenseState: need at least one qubit");
    if (n > kMaxQubits) throw std::invalid_argument("DenseState: more than 12 qubits");
    amps_.assign(1ULL << n, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

void DenseState::set_basis_state(uint64_t index) {
    if (index >= amps_.size()) throw std::out_of_range("set_basis_state");
    std::fill(amps_.begin(), amps_.end(), cplx{0.0, 0.0});
    amps_[index] = 1.0;
}

void DenseState::apply(const GateOp& g) {
    if (!is_unitary(g.kind)) throw std::invalid_argument("DenseState: non-unitary op");
    uint32_t q0 = static_cast<uint32_t>(g.q0);
    if (q0 >= n_) throw std::out_of_range("DenseState: qubit out of range");
    uint64_t b0 = 1ULL << q0;
    switch (g.kind) {
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            for (uint64_t i = 0; i < amps_.size(); ++i) {
                if (i & b0) continue;
                cplx a = amps_[i], b = amps_[i | b0];
                amps_[i] = s * (a + b);
                amps_[i | b0] = s * (a - b);
            }
            return;
        }
        case GateKind::S:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if (i & b0) amps_[i] *= I;
            return;
        case GateKind::X:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if (!(i & b0)) std::swap(amps_[i], amps_[i | b0]);
            return;
        case GateKind::Y:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if (!(i & b0)) {
                    cplx a = amps_[i], b = amps_[i | b0];
                    amps_[i] = -I * b;
                    amps_[i | b0] = I * a;
                }
            return;
        case GateKind::Z:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if (i & b0) amps_[i] = -amps_[i];
            return;
        default: break;
    }
    uint32_t q1 = static_cast<uint32_t>(g.q1);
    if (q1 >= n_) throw std::out_of_range("DenseState: qubit out of range");
    uint64_t b1 = 1ULL << q1;
    switch (g.kind) {
        case GateKind::CNOT:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[i | b1]);
            return;
        case GateKind::SWAP:
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[(i & ~b0) | b1]);
            return;
        case GateKind::CNOTSWAP:
            // CNOT(q0,q1) then SWAP(q0,q1).
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[i | b1]);
            for (uint64_t i = 0; i < amps_.size(); ++i)
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[(i & ~b0) | b1]);
            return;
        case GateKind::ISWAP:
            for (uint64_t i = 0; i < amps_.size(); ++i) {
                if ((i & b0) && !(i & b1)) {
                    uint64_t j = (i & ~b0) | b1;
                    cplx a = amps_[i], b = amps_[j];
                    amps_[i] = I * b;
                    amps_[j] = I * a;
                }
            }
            return;
        default: throw std::invalid_argument("DenseState: unsupported gate");
    }
}

void DenseState::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    for (uint32_t q = 0; q < n_; ++q) {
        switch (p.pauli_at(q)) {
            case 1: apply(GateOp(GateKind::X, static_cast<int>(q))); break;
            case 2: apply(GateOp(GateKind::Z, static_cast<int>(q))); break;
            case 3: apply(GateOp(GateKind::Y, static_cast<int>(q))); break;
            default: break;
        }
    }
    if (p.sign() == -1)
        for (auto& a : amps_) a = -a;
}

double DenseState::prob_one(uint32_t q) const {
    if (q >= n_) throw std::out_of_range("prob_one");
    uint64_t b = 1ULL << q;
    double p = 0;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if (i & b) p += std::norm(amps_[i]);
    return p;
}

void DenseState::collapse_z(uint32_t q, int outcome) {
    uint64_t b = 1ULL << q;
    double p = 0;
    for (uint64_t i = 0; i < amps_.size(); ++i)
        if (((i & b) != 0) == (outcome != 0)) p += std::norm(amps_[i]);
    if (p < 1e-300) throw std::logic_error("collapse_z: impossible outcome");
    double s = 1.0 / std::sqrt(p);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i & b) != 0) == (outcome != 0))
            amps_[i] *= s;
        else
            amps_[i] = 0;
    }
}

int DenseState::measure_z(uint32_t q, Rng& rng) {
    double p1 = prob_one(q);
    int outcome = rng.next_double() < p1 ? 1 : 0;
    if (outcome == 1 && p1 < 1e-300) outcome = 0;
    if (outcome == 0 && 1 - p1 < 1e-300) outcome = 1;
    collapse_z(q, outcome);
    return outcome;
}

double DenseState::norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

cplx DenseState::inner_product(const DenseState& other) const {
    if (n_ != other.n_) throw std::invalid_argument("inner_product: size mismatch");
    cplx s{0, 0};
    for (uint64_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

cplx DenseState::expectation(const PauliString& p) const {
    DenseState copy = *this;
    copy.apply_pauli(p);
    return inner_product(copy);
}

bool states_equal_up_to_phase(const DenseState& a, const DenseState& b, double tol) {
    return std::abs(a.inner_product(b)) > 1.0 - tol;
}

DenseUnitary DenseUnitary::identity(uint32_t k) {
    DenseUnitary u;
    u.k = k;
    u.m.assign(static_cast<size_t>(u.dim()) * u.dim(), cplx{0, 0});
    for (uint32_t i = 0; i < u.dim(); ++i) u.at(i, i) = 1.0;
    return u;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& rhs) const {
    if (k != rhs.k) throw std::invalid_argument("DenseUnitary: dimension mismatch");
    DenseUnitary out;
    out.k = k;
    out.m.assign(m.size(), cplx{0, 0});
    uint32_t d = dim();
    for (uint32_t r = 0; r < d; ++r)
        for (uint32_t i = 0; i < d; ++i) {
            cplx v = at(r, i);
            if (v == cplx{0, 0}) continue;
            for (uint32_t c = 0; c < d; ++c) out.at(r, c) += v * rhs.at(i, c);
        }
    return out;
}

bool DenseUnitary::is_unitary(double tol) const {
    uint32_t d = dim();
    for (uint32_t r = 0; r < d; ++r) {
        for (uint32_t c = 0; c < d; ++c) {
            cplx s{0, 0};
            for (uint32_t i = 0; i < d; ++i) s += std::conj(at(i, r)) * at(i, c);
            cplx want = (r == c) ? cplx{1, 0} : cplx{0, 0};
            if (std::abs(s - want) > tol) return false;
        }
    }
    return true;
}

DenseUnitary gate_matrix(GateKind k) {
    auto mk1 = [](cplx a, cplx b, cplx c, cplx d) {
        DenseUnitary u;
        u.k = 1;
        u.m = {a, b, c, d};
        return u;
    };
    const double s = 1.0 / std::sqrt(2.0);
    switch (k) {
        case GateKind::H: return mk1(s, s, s, -s);
        case GateKind::S: return mk1(1, 0, 0, I);
        case GateKind::X: return mk1(0, 1, 1, 0);
        case GateKind::Y: return mk1(0, -I, I, 0);
        case GateKind::Z: return mk1(1, 0, 0, -1);
        default: break;
    }
    DenseUnitary u;
    u.k = 2;
    u.m.assign(16, cplx{0, 0});
    // Basis order |q1 q0> as integers 0..3 with q0 least significant.
    auto perm = [&](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
        u.at(a, 0) = 1;
        u.at(b, 1) = 1;
        u.at(c, 2) = 1;
        u.at(d, 3) = 1;
    };
    switch (k) {
        case GateKind::CNOT: perm(0, 3, 2, 1); return u;       // q0 controls q1
        case GateKind::SWAP: perm(0, 2, 1, 3); return u;
        case GateKind::CNOTSWAP: perm(0, 3, 1, 2); return u;   // CNOT then SWAP
        case GateKind::ISWAP:
            u.at(0, 0) = 1;
            u.at(2, 1) = I;
            u.at(1, 2) = I;
            u.at(3, 3) = 1;
            return u;
        default: throw std::invalid_argument("gate_matrix: not a unitary gate");
    }
}

double unitary_distance_up_to_phase(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.k != b.k) throw std::invalid_argument("unitary_distance: dimension mismatch");
    // Pick the phase from the largest entry of b.
    uint32_t d = a.dim();
    uint32_t best = 0;
    double bestmag = -1;
    for (uint32_t i = 0; i < d * d; ++i) {
        if (std::abs(b.m[i]) > bestmag) {
            bestmag = std::abs(b.m[i]);
            best = i;
        }
    }
    if (bestmag < 1e-12) throw std::invalid_argument("unitary_distance: zero matrix");
    cplx phase = a.m[best] / b.m[best];
    double mag = std::abs(phase);
    if (mag < 1e-12) return 2.0; // structurally different
    phase /= mag;
    double worst = 0;
    for (uint32_t i = 0; i < d * d; ++i) worst = std::max(worst, std::abs(a.m[i] - phase * b.m[i]));
    return worst;
}

} // namespace qws
