#pragma once

#include <vector>

#include "qbench/architecture.hpp"
#include "qbench/channels.hpp"
#include "qbench/circuit.hpp"
#include "qbench/distribution.hpp"
#include "qbench/errors.hpp"

namespace qbench {

/// Mixed state over n qubits, row-major 2^n x 2^n.
struct DensityMatrix {
    int num_qubits = 0;
    std::size_t dim = 0;
    std::vector<cxd> rho;

    static DensityMatrix zero_state(int num_qubits);

    cxd& at(std::size_t i, std::size_t j) { return rho[i * dim + j]; }
    const cxd& at(std::size_t i, std::size_t j) const { return rho[i * dim + j]; }

    double trace_real() const;
    std::vector<double> diagonal() const;

    /// rho <- U rho U^dag with U acting on the given qubits (local basis bit
    /// j = qubits[j]).
    void apply_unitary(const CMatrix& u, const std::vector<int>& qubits);

    /// rho <- sum_i K_i rho K_i^dag.
    void apply_channel(const KrausChannel& ch, const std::vector<int>& qubits);
};

struct NoisySimOptions {
    int max_qubits = 12;               // density-matrix width cap
    double composite_charge_factor = 1.0;  // error-weight multiplier for opaque unitaries
};

/// Deterministic noisy evolution of a circuit on an architecture: route,
/// apply preparation flips (p_m), per gate the ideal unitary followed by a
/// depolarizing channel (p_r) and thermal relaxation over the gate duration,
/// and finally a classical readout confusion flip (p_s) on each measured
/// bit. Returns the exact diagonal marginal; nothing is sampled.
///
/// Only qubits the routed circuit touches enter the density matrix; the
/// rest stay in |0> and marginalize away exactly.
OutcomeDistribution run_noisy(const Circuit& c, const ArchitectureSpec& arch,
                              std::vector<int> layout = {}, const NoisySimOptions& opts = {});

}  // namespace qbench
