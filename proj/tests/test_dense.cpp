#include <doctest.h>

#include "qws/run.hpp"

using namespace qws;

TEST_CASE("hadamard on |0>") {
    DenseState s(1);
    s.apply(GateOp(GateKind::H, 0));
    CHECK(std::abs(s.amplitudes()[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(s.amplitudes()[1] - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("norm preserved by every unitary gate") {
    Rng rng(4);
    DenseState s(3);
    const GateKind one_q[] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Y, GateKind::Z};
    const GateKind two_q[] = {GateKind::CNOT, GateKind::SWAP, GateKind::CNOTSWAP, GateKind::ISWAP};
    for (int i = 0; i < 60; ++i) {
        if (rng.next_bool())
            s.apply(GateOp(one_q[rng.next_below(5)], static_cast<int>(rng.next_below(3))));
        else {
            int a = static_cast<int>(rng.next_below(3));
            int b = (a + 1 + static_cast<int>(rng.next_below(2))) % 3;
            s.apply(GateOp(two_q[rng.next_below(4)], a, b));
        }
        CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("every gate matrix is unitary") {
    const GateKind all[] = {GateKind::H,    GateKind::S,    GateKind::X,        GateKind::Y,
                            GateKind::Z,    GateKind::CNOT, GateKind::SWAP,     GateKind::CNOTSWAP,
                            GateKind::ISWAP};
    for (GateKind k : all) CHECK(gate_matrix(k).is_unitary(1e-12));
}

TEST_CASE("cnotswap truth table") {
    // {00 -> 00, 01 -> 11, 10 -> 01, 11 -> 10} in |q1 q0> notation with
    // q0 the control.
    auto u = gate_matrix(GateKind::CNOTSWAP);
    auto expect = [&](uint32_t in, uint32_t out) {
        CHECK(std::abs(u.at(out, in) - cplx{1, 0}) < 1e-12);
    };
    expect(0b00, 0b00);
    expect(0b01, 0b11);
    expect(0b10, 0b01);
    expect(0b11, 0b10);
}

TEST_CASE("states equal up to phase") {
    DenseState a(2), b(2);
    a.apply(GateOp(GateKind::H, 0));
    b.apply(GateOp(GateKind::H, 0));
    // Multiply b by a global phase.
    for (auto& amp : b.amplitudes()) amp *= cplx{0, 1};
    CHECK(states_equal_up_to_phase(a, b, 1e-9));
    DenseState c(2);
    c.set_basis_state(1);
    DenseState d(2);
    d.set_basis_state(2);
    CHECK(!states_equal_up_to_phase(c, d, 1e-9));
    DenseState e(1);
    CHECK_THROWS(a.inner_product(e));
}

TEST_CASE("empty circuit unitary is identity; swap squared is identity") {
    Circuit empty(2);
    auto u = circuit_unitary(empty);
    CHECK(unitary_distance_up_to_phase(u, DenseUnitary::identity(2)) < 1e-12);

    Circuit sw(2);
    sw.append_gate(GateOp(GateKind::SWAP, 0, 1));
    sw.append_gate(GateOp(GateKind::SWAP, 0, 1));
    CHECK(unitary_distance_up_to_phase(circuit_unitary(sw), DenseUnitary::identity(2)) < 1e-12);

    Circuit big(4);
    CHECK_THROWS(circuit_unitary(big));
}

TEST_CASE("qubit cap enforced") {
    CHECK_THROWS(DenseState(13));
    DenseState ok(12);
    CHECK(ok.num_qubits() == 12);
}
