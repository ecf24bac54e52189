#pragma once

#include "qws/circuit.hpp"
#include "qws/dense.hpp"
#include "qws/tableau.hpp"

namespace qws {

void run_circuit(Tableau& state, const Circuit& c, Rng& rng);

/// Dense execution; measurement/reset ops consume the rng.
void run_circuit(DenseState& state, const Circuit& c, Rng& rng);

/// Product of gate matrices in moment order. The circuit must be unitary
/// and act on at most 3 qubits.
DenseUnitary circuit_unitary(const Circuit& c);

} // namespace qws
