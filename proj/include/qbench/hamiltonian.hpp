#pragma once

#include "qbench/circuit.hpp"
#include "qbench/pauli.hpp"

namespace qbench {

/// Walk Hamiltonian H = A/2 of the N-node cycle (hopping rate 1/degree),
/// N a power of two. The two-node cycle collapses to a single edge under
/// the simple-graph convention, giving H = X/2.
HermitianOperator cycle_walk_hamiltonian(int num_nodes);

/// Largest |eigenvalue|.
double spectral_norm(const HermitianOperator& h);

/// Repetition count for a first-order product formula at error budget eps:
/// 1 when every pair of terms commutes, otherwise ceil((|H| t)^2 / eps)
/// with unit constant.
int trotter_reps(const PauliDecomposition& terms, double t, double eps);

/// Circuit for exp(-i theta sigma_s): basis changes (H for X, Sdg-H for Y),
/// a CX parity ladder onto the last non-identity qubit, RZ(2 theta), and
/// the inverse of the conjugation. All-identity strings yield an empty
/// circuit; the dropped global phase is exactly e^{-i theta}.
Circuit exp_pauli_circuit(const PauliTerm& term, double theta, int num_qubits = 0);

/// r repetitions of the term exponentials, terms in lexicographic string
/// order, each advanced by coefficient * t / r.
Circuit trotter_circuit(const PauliDecomposition& terms, double t, int r);

/// exp(-i H t) through the eigendecomposition of H.
CMatrix exact_evolution(const HermitianOperator& h, double t);

}  // namespace qbench
