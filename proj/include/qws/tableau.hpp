#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qws/gate.hpp"
#include "qws/pauli.hpp"
#include "qws/rng.hpp"

namespace qws {

struct MeasurementRecord {
    int qubit;
    int outcome;        // 0 or 1
    bool deterministic; // outcome forced by the state (no coin used)
};

enum class Basis : uint8_t { Z, X };

/// Stabilizer state on n qubits: n destabilizer + n stabilizer generators.
///
/// Storage is column-major: for each qubit there is a row-bitmask word
/// vector, so Clifford gates cost O(rows/64) word operations. Row k of the
/// sign word is the sign of generator k; rows 0..n-1 are destabilizers,
/// rows n..2n-1 stabilizers. Initial state is |0...0>.
class Tableau {
  public:
    explicit Tableau(uint32_t n);

    uint32_t num_qubits() const { return n_; }

    void apply(const GateOp& g, Rng* rng = nullptr);
    void apply_h(uint32_t q);
    void apply_s(uint32_t q);
    void apply_x(uint32_t q);
    void apply_y(uint32_t q);
    void apply_z(uint32_t q);
    void apply_cnot(uint32_t c, uint32_t t);
    void apply_swap(uint32_t a, uint32_t b);
    void apply_cnotswap(uint32_t c, uint32_t t); // CNOT(c,t) then SWAP(c,t)
    void apply_iswap(uint32_t a, uint32_t b);

    MeasurementRecord measure_z(uint32_t q, Rng& rng);
    MeasurementRecord measure_x(uint32_t q, Rng& rng);
    void reset(uint32_t q, Basis basis, Rng& rng);

    /// Flip generator signs for everything anticommuting with p.
    void apply_pauli(const PauliString& p);

    /// Sign of a Pauli whose value is determined by the state: returns
    /// +1/-1 if p (or -p) is in the stabilizer group, nullopt otherwise.
    std::optional<int> expectation(const PauliString& p) const;

    PauliString stabilizer_row(uint32_t k) const;   // k in [0, n)
    PauliString destabilizer_row(uint32_t k) const; // k in [0, n)

    /// Commutation structure + GF(2) rank check; used by tests.
    bool validate() const;

    bool in_codespace(const std::vector<PauliString>& stabilizers) const;

  private:
    void row_mul(uint32_t dst, uint32_t src); // generator[dst] *= generator[src]
    int row_phase_is_minus(uint32_t row) const { return (r_[row >> 6] >> (row & 63)) & 1; }
    PauliString extract_row(uint32_t row) const;

    uint32_t n_;
    uint32_t rw_; // words per row-bitmask column
    // xcol_[q] / zcol_[q]: bit r = generator r has X/Z on qubit q.
    std::vector<std::vector<uint64_t>> xcol_, zcol_;
    std::vector<uint64_t> r_;
};

/// True iff the signed stabilizer groups coincide after relabeling b's
/// qubits with `perm` (qubit q of b is compared as qubit perm[q]).
bool stabilizer_groups_equal(const Tableau& a, const Tableau& b, const std::vector<uint32_t>& perm);
bool stabilizer_groups_equal(const Tableau& a, const Tableau& b);

/// Canonical signed generator list (Gaussian elimination over GF(2)).
std::vector<PauliString> canonical_stabilizers(const Tableau& t);

/// Scrambles the state with a seeded random Clifford circuit; used to
/// generate random stabilizer inputs for equivalence tests.
void randomize_state(Tableau& t, Rng& rng, uint32_t gate_count = 0);
void randomize_state_subset(Tableau& t, const std::vector<uint32_t>& qubits, Rng& rng,
                            uint32_t gate_count = 0);

} // namespace qws
