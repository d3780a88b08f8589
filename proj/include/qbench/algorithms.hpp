#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbench/circuit.hpp"

namespace qbench {

enum class AlgorithmKind { DTQW, CTQW, PD, QPE, QSa, QSn };

std::string algorithm_name(AlgorithmKind k);
std::optional<AlgorithmKind> algorithm_from_name(const std::string& name);

/// Benchmark algorithm selection plus its per-kind parameters. Exactly the
/// parameters a kind uses may be present; validate() enforces that.
struct AlgorithmConfig {
    AlgorithmKind kind = AlgorithmKind::DTQW;
    int state_qubits = 2;                      // position/counting/search register width
    std::optional<int> steps;                  // DTQW coin flips
    std::optional<double> time;                // CTQW/PD evolution time
    std::optional<double> phase;               // QPE phase as a fraction of a turn, [0, 1)
    std::optional<std::uint64_t> marked_item;  // QS
    std::optional<int> iterations;             // QS
    std::optional<int> trotter_r;              // PD override

    void validate() const;
    std::string algorithm() const { return algorithm_name(kind); }
};

/// Coined walk on the 2^k cycle: per step a Hadamard coin flip, a position
/// decrement when the coin is |0> and an increment when it is |1>, both as
/// cascaded multi-controlled-X chains with modular wraparound. The coin is
/// the last qubit; only the position register is measured.
Circuit build_dtqw(int position_qubits, int steps);

/// Continuous walk as one opaque-unitary gate exp(-i H t) on the position
/// register (at most three qubits), then measurement.
Circuit build_ctqw_exact(int position_qubits, double t);

/// Product-formula circuit for the cycle walk Hamiltonian at r repetitions.
Circuit build_pd(int position_qubits, double t, int r);

/// Phase estimation of the single-qubit phase gate with eigenvalue
/// e^{2 pi i theta}; `theta` is the fraction of a turn. Counting register
/// first, eigenstate qubit last.
Circuit build_qpe(int counting_qubits, double theta);

/// Grover search for `marked` over n qubits. With use_ancilla the
/// multi-controlled-Z of oracle and diffusion runs through two work qubits
/// (workspace n+2 for n >= 3); without it the decomposition stays on the
/// search register.
Circuit build_grover(int n, std::uint64_t marked, int iterations, bool use_ancilla);

Circuit build_circuit(const AlgorithmConfig& config);

/// Closed-form success outcomes: (decimal label, probability) pairs.
std::vector<std::pair<std::uint64_t, double>> theoretical_success(const AlgorithmConfig& config);

/// Analytic cycle-walk position distribution at time t (Fourier form),
/// indexed by node.
std::vector<double> ctqw_position_distribution(int position_qubits, double t);

}  // namespace qbench
