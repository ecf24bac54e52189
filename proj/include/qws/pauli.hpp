#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qws {

/// n-qubit Pauli operator stored as X/Z bit masks plus a phase.
///
/// The stored operator is i^phase * X^x * Z^z (qubit-wise). Hermitian
/// operators have phase == popcount(x & z) mod 2; the public sign() is
/// +1/-1 and throws if the operator is imaginary, so no imaginary phase
/// ever crosses an API boundary.
class PauliString {
  public:
    PauliString() : n_(0) {}
    explicit PauliString(uint32_t n) : n_(n), x_(words(n), 0), z_(words(n), 0), phase_(0) {}

    /// Parse e.g. "X3X6", "-Z0", "Y2", "I" for an n-qubit operator.
    static PauliString parse(uint32_t n, const std::string& text);

    uint32_t num_qubits() const { return n_; }

    bool x_bit(uint32_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(uint32_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x(uint32_t q, bool v);
    void set_z(uint32_t q, bool v);

    /// 0=I, 1=X, 2=Z, 3=Y on qubit q.
    int pauli_at(uint32_t q) const { return (x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0); }
    void set_pauli(uint32_t q, int p);

    uint32_t weight() const;
    bool is_identity() const { return weight() == 0 && sign() == +1; }

    /// +1 or -1; throws std::logic_error if the phase is imaginary.
    int sign() const;
    void set_sign(int s);

    /// Group product; tracks the i^k phase exactly.
    PauliString operator*(const PauliString& other) const;

    bool commutes_with(const PauliString& other) const;

    bool operator==(const PauliString& other) const = default;

    std::string str() const;

    const std::vector<uint64_t>& x_words() const { return x_; }
    const std::vector<uint64_t>& z_words() const { return z_; }
    uint8_t raw_phase() const { return phase_; }
    void set_raw_phase(uint8_t p) { phase_ = p & 3; }

    static uint32_t words(uint32_t n) { return (n + 63) / 64; }

  private:
    uint32_t n_;
    std::vector<uint64_t> x_, z_;
    uint8_t phase_ = 0; // exponent of i, mod 4
};

/// Convenience constructors for single- and two-qubit Paulis.
PauliString pauli_x(uint32_t n, uint32_t q);
PauliString pauli_y(uint32_t n, uint32_t q);
PauliString pauli_z(uint32_t n, uint32_t q);

} // namespace qws
