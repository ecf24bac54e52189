#include <doctest.h>

#include "qws/run.hpp"
#include "qws/tableau.hpp"

using namespace qws;

TEST_CASE("new state is |0...0>") {
    Tableau t(4);
    for (uint32_t k = 0; k < 4; ++k) {
        PauliString s = t.stabilizer_row(k);
        CHECK(s.weight() == 1);
        CHECK(s.z_bit(k));
        CHECK(s.sign() == +1);
    }
    Rng rng(1);
    auto rec = t.measure_z(0, rng);
    CHECK(rec.outcome == 0);
    CHECK(rec.deterministic);
    CHECK(t.validate());
    CHECK_THROWS(Tableau(0));
}

TEST_CASE("seventeen qubit state works") {
    Tableau t(17);
    CHECK(t.validate());
    Rng rng(2);
    for (uint32_t q = 0; q < 17; ++q) CHECK(t.measure_z(q, rng).outcome == 0);
}

TEST_CASE("plus state measurement statistics") {
    Rng rng(12345);
    int ones = 0;
    const int shots = 10000;
    for (int s = 0; s < shots; ++s) {
        Tableau t(1);
        t.apply_h(0);
        auto rec = t.measure_z(0, rng);
        CHECK(!rec.deterministic);
        ones += rec.outcome;
    }
    // 3 sigma binomial bounds around 1/2.
    double sigma = std::sqrt(0.25 * shots);
    CHECK(std::abs(ones - shots / 2.0) < 3 * sigma);
}

TEST_CASE("repeated measurement is stable") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Tableau t(5);
        randomize_state(t, rng);
        for (uint32_t q = 0; q < 5; ++q) {
            auto a = t.measure_z(q, rng);
            auto b = t.measure_z(q, rng);
            CHECK(b.deterministic);
            CHECK(a.outcome == b.outcome);
        }
        CHECK(t.validate());
    }
}

TEST_CASE("apply_pauli flips outcomes and is an involution") {
    Tableau t(6);
    t.apply_pauli(pauli_x(6, 3));
    Rng rng(3);
    CHECK(t.measure_z(3, rng).outcome == 1);

    Tableau u(6);
    randomize_state(u, rng);
    auto before = canonical_stabilizers(u);
    PauliString p = PauliString::parse(6, "X1Z2Y4");
    u.apply_pauli(p);
    u.apply_pauli(p);
    CHECK(canonical_stabilizers(u) == before);

    CHECK_THROWS(u.apply_pauli(PauliString(5)));
}

TEST_CASE("reset in both bases") {
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Tableau t(3);
        randomize_state(t, rng);
        t.reset(1, Basis::Z, rng);
        auto rec = t.measure_z(1, rng);
        CHECK(rec.deterministic);
        CHECK(rec.outcome == 0);

        t.reset(1, Basis::X, rng);
        t.apply_h(1);
        rec = t.measure_z(1, rng);
        CHECK(rec.deterministic);
        CHECK(rec.outcome == 0);
    }
}

TEST_CASE("swap twice is identity on the stabilizer group") {
    Rng rng(21);
    Tableau t(4);
    randomize_state(t, rng);
    auto before = canonical_stabilizers(t);
    t.apply_swap(1, 3);
    t.apply_swap(1, 3);
    CHECK(canonical_stabilizers(t) == before);
}

TEST_CASE("group equality with relabeling") {
    Tableau a(2), b(2);
    CHECK(stabilizer_groups_equal(a, b));
    b.apply_h(1); // |0+> vs |00>
    CHECK(!stabilizer_groups_equal(a, b));

    // |+0> relabeled with swap equals |0+>.
    Tableau c(2);
    c.apply_h(0);
    CHECK(stabilizer_groups_equal(b, c, {1, 0}));
    CHECK_THROWS(stabilizer_groups_equal(b, c, {0, 0}));
}

TEST_CASE("tableau validity after random circuits") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        Tableau t(8);
        randomize_state(t, rng);
        for (int m = 0; m < 6; ++m) t.measure_z(static_cast<uint32_t>(rng.next_below(8)), rng);
        CHECK(t.validate());
    }
}

TEST_CASE("gate conjugation against dense oracle for all gates") {
    // Each gate's action on single-qubit Pauli generators must match the
    // dense oracle's conjugation.
    const GateKind one_q[] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Y, GateKind::Z};
    const GateKind two_q[] = {GateKind::CNOT, GateKind::SWAP, GateKind::CNOTSWAP, GateKind::ISWAP};

    auto check_gate = [](const GateOp& g, uint32_t n) {
        // For every starting generator P in {X_q, Z_q}, the stabilizer
        // simulator's image of P must, as an operator, hold on the dense
        // side: U P U+ has expectation +1 on U|psi> when P stabilizes
        // |psi>. We verify conjugation directly on stabilizer states
        // prepared in eigenstates of P.
        for (uint32_t q = 0; q < n; ++q) {
            for (int which = 0; which < 2; ++which) {
                Tableau t(n);
                DenseState d(n);
                // Prepare eigenstate of X_q (via H) or Z_q (default).
                if (which == 1) {
                    t.apply_h(q);
                    d.apply(GateOp(GateKind::H, static_cast<int>(q)));
                }
                t.apply(g);
                d.apply(g);
                // Every stabilizer generator of t must have dense
                // expectation +1.
                for (uint32_t k = 0; k < n; ++k) {
                    PauliString s = t.stabilizer_row(k);
                    cplx e = d.expectation(s);
                    CHECK(std::abs(e - cplx{1, 0}) < 1e-9);
                }
            }
        }
    };

    for (GateKind k : one_q)
        for (int q = 0; q < 2; ++q) check_gate(GateOp(k, q), 2);
    for (GateKind k : two_q) {
        check_gate(GateOp(k, 0, 1), 2);
        check_gate(GateOp(k, 1, 0), 2);
    }
}

TEST_CASE("out of range and coincident indices rejected") {
    Tableau t(3);
    CHECK_THROWS(t.apply_h(3));
    CHECK_THROWS(t.apply_cnot(0, 3));
    CHECK_THROWS(t.apply_cnot(1, 1));
    CHECK_THROWS(t.apply_swap(2, 2));
}

TEST_CASE("oracle agreement on random circuits") {
    // Random <=10 qubit Clifford circuits: stabilizer outcome
    // probabilities match the dense oracle exactly (0, 1/2, or 1).
    Rng rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(rng.next_below(9)); // 2..10
        Tableau t(n);
        DenseState d(n);
        uint32_t gates = 20 + static_cast<uint32_t>(rng.next_below(40));
        for (uint32_t i = 0; i < gates; ++i) {
            uint32_t pick = static_cast<uint32_t>(rng.next_below(6));
            uint32_t a = static_cast<uint32_t>(rng.next_below(n));
            uint32_t b = (a + 1 + static_cast<uint32_t>(rng.next_below(n - 1))) % n;
            GateOp op = GateOp(GateKind::H, static_cast<int>(a));
            switch (pick) {
                case 0: op = GateOp(GateKind::H, static_cast<int>(a)); break;
                case 1: op = GateOp(GateKind::S, static_cast<int>(a)); break;
                case 2: op = GateOp(GateKind::CNOT, static_cast<int>(a), static_cast<int>(b)); break;
                case 3: op = GateOp(GateKind::CNOTSWAP, static_cast<int>(a), static_cast<int>(b)); break;
                case 4: op = GateOp(GateKind::ISWAP, static_cast<int>(a), static_cast<int>(b)); break;
                case 5: op = GateOp(GateKind::X, static_cast<int>(a)); break;
            }
            t.apply(op);
            d.apply(op);
        }
        // Measure a few qubits, keeping both sides collapsed consistently.
        for (int m = 0; m < 4; ++m) {
            uint32_t q = static_cast<uint32_t>(rng.next_below(n));
            double p1 = d.prob_one(q);
            auto rec = t.measure_z(q, rng);
            if (rec.deterministic) {
                CHECK(std::abs(p1 - rec.outcome) < 1e-9);
            } else {
                CHECK(std::abs(p1 - 0.5) < 1e-9);
            }
            d.collapse_z(q, rec.outcome);
        }
    }
}
