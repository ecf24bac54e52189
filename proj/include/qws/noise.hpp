#pragma once

#include <cstdint>
#include <vector>

#include "qws/circuit.hpp"
#include "qws/pauli.hpp"
#include "qws/rng.hpp"

namespace qws {

struct NoiseModel {
    double p1 = 0; // single-qubit error probability per location
    double p2 = 0; // two-qubit error probability per CNOT+SWAP
};

enum class NoiseLocKind : uint8_t {
    Idle,      // untouched qubit in a moment          (p1, after the moment)
    AfterGate, // two-qubit gate                       (p2, after the moment)
    AfterInit, // reset                                (p1, after the moment)
    AfterH,    // Hadamard                             (p1, after the moment)
    BeforeMeas // computational-basis measurement      (p1, before the moment)
};

struct NoiseLocation {
    uint32_t moment;
    NoiseLocKind kind;
    int q0;
    int q1; // second qubit for AfterGate, else -1
};

/// Depolarizing-noise locations of a scheduled circuit, in execution order.
std::vector<NoiseLocation> enumerate_noise_locations(const Circuit& c);

/// pauli0/pauli1: 0=I 1=X 2=Z 3=Y on the location's qubit(s).
struct SampledError {
    uint32_t location; // index into the enumerated list
    uint8_t pauli0;
    uint8_t pauli1;
};

/// One of {X,Y,Z} with probability p1 (uniform thirds) per single-qubit
/// location; one of the fifteen two-qubit Paulis with probability p2 per
/// CNOT+SWAP. Appends to `out`.
void sample_noise(const std::vector<NoiseLocation>& locs, const NoiseModel& m, Rng& rng,
                  std::vector<SampledError>& out);

/// Symplectic Pauli propagation through Clifford circuits (signs ignored).
/// Measurements record whether the tracked Pauli flips the outcome; resets
/// clear the tracked components on the reset qubit.
class PauliTracker {
  public:
    explicit PauliTracker(uint32_t n) : n_(n), x_(PauliString::words(n), 0), z_(x_) {}

    uint32_t num_qubits() const { return n_; }
    bool x_bit(uint32_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(uint32_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    bool is_identity() const;

    void inject(uint32_t q, uint8_t pauli); // xor an I/X/Z/Y component

    /// Applies one op; returns true when op is MeasZ and the tracked Pauli
    /// flips its outcome.
    bool apply(const GateOp& op);

    /// Restriction to the given qubits (in their listed order), as a
    /// sign-positive PauliString.
    PauliString restrict_to(const std::vector<uint32_t>& qubits) const;

  private:
    void set_x(uint32_t q, bool v);
    void set_z(uint32_t q, bool v);
    uint32_t n_;
    std::vector<uint64_t> x_, z_;
};

} // namespace qws
