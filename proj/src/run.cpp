#include "qws/run.hpp"

#include <stdexcept>

namespace qws {

void run_circuit(Tableau& state, const Circuit& c, Rng& rng) {
    if (state.num_qubits() != c.num_qubits())
        throw std::invalid_argument("run_circuit: qubit count mismatch");
    for (const auto& m : c.moments())
        for (const auto& op : m.ops) state.apply(op, &rng);
}

void run_circuit(DenseState& state, const Circuit& c, Rng& rng) {
    if (state.num_qubits() != c.num_qubits())
        throw std::invalid_argument("run_circuit: qubit count mismatch");
    for (const auto& m : c.moments()) {
        for (const auto& op : m.ops) {
            switch (op.kind) {
                case GateKind::MeasZ: state.measure_z(op.q0, rng); break;
                case GateKind::ResetZ:
                    if (state.measure_z(op.q0, rng)) state.apply(GateOp(GateKind::X, op.q0));
                    break;
                case GateKind::ResetX: {
                    state.apply(GateOp(GateKind::H, op.q0));
                    if (state.measure_z(op.q0, rng)) state.apply(GateOp(GateKind::X, op.q0));
                    state.apply(GateOp(GateKind::H, op.q0));
                    break;
                }
                default: state.apply(op);
            }
        }
    }
}

DenseUnitary circuit_unitary(const Circuit& c) {
    if (c.num_qubits() > 3) throw std::invalid_argument("circuit_unitary: more than 3 qubits");
    for (const auto& m : c.moments())
        for (const auto& op : m.ops)
            if (!is_unitary(op.kind))
                throw std::invalid_argument("circuit_unitary: non-unitary operation");
    uint32_t k = c.num_qubits();
    DenseUnitary u = DenseUnitary::identity(k);
    uint32_t dim = 1u << k;
    // Column-by-column through the dense simulator.
    for (uint32_t col = 0; col < dim; ++col) {
        DenseState s(k);
        s.set_basis_state(col);
        Rng dummy(0);
        run_circuit(s, c, dummy);
        for (uint32_t row = 0; row < dim; ++row) u.at(row, col) = s.amplitudes()[row];
    }
    return u;
}

} // namespace qws
