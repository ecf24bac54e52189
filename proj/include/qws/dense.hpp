#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qws/gate.hpp"
#include "qws/pauli.hpp"
#include "qws/rng.hpp"

namespace qws {

using cplx = std::complex<double>;

/// Brute-force complex state vector, hard-capped at 12 qubits. Serves as
/// the independent oracle for the stabilizer simulator; never used in the
/// Monte Carlo path.
class DenseState {
  public:
    static constexpr uint32_t kMaxQubits = 12;

    explicit DenseState(uint32_t n);

    uint32_t num_qubits() const { return n_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }

    /// Little-endian: bit q of the basis index is the value of qubit q.
    void set_basis_state(uint64_t index);

    void apply(const GateOp& g);
    void apply_pauli(const PauliString& p);

    /// Probability that a Z measurement of q yields 1.
    double prob_one(uint32_t q) const;
    /// Collapse qubit q to the given outcome (normalizing); probability
    /// of that outcome must be nonzero.
    void collapse_z(uint32_t q, int outcome);
    int measure_z(uint32_t q, Rng& rng);

    double norm() const;
    cplx inner_product(const DenseState& other) const;

    /// <P> for a Pauli observable.
    cplx expectation(const PauliString& p) const;

  private:
    uint32_t n_;
    std::vector<cplx> amps_;
};

/// |<a|b>| > 1 - tol.
bool states_equal_up_to_phase(const DenseState& a, const DenseState& b, double tol = 1e-9);

/// Dense 2^k x 2^k unitary, k <= 3; row-major.
struct DenseUnitary {
    uint32_t k = 0;
    std::vector<cplx> m; // dim*dim, dim = 1<<k

    uint32_t dim() const { return 1u << k; }
    cplx& at(uint32_t r, uint32_t c) { return m[r * dim() + c]; }
    const cplx& at(uint32_t r, uint32_t c) const { return m[r * dim() + c]; }

    static DenseUnitary identity(uint32_t k);
    DenseUnitary operator*(const DenseUnitary& rhs) const;
    bool is_unitary(double tol = 1e-12) const;
};

/// 2x2 / 4x4 matrix of a unitary gate kind (in the gate's own qubit order,
/// little-endian with q0 = least significant bit).
DenseUnitary gate_matrix(GateKind k);

/// Maximum |a_ij - e^{i phi} b_ij| minimized over the global phase phi.
double unitary_distance_up_to_phase(const DenseUnitary& a, const DenseUnitary& b);

} // namespace qws
