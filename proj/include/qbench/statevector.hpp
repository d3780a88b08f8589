#pragma once

#include "qbench/circuit.hpp"
#include "qbench/distribution.hpp"
#include "qbench/errors.hpp"
#include "qbench/linalg.hpp"

namespace qbench {

/// Pure state over n qubits; amplitude index bit k is qubit k.
struct StateVector {
    int num_qubits = 0;
    std::vector<cxd> amps;

    static StateVector zero_state(int num_qubits);
    double norm() const;
};

struct IdealSimOptions {
    int max_qubits = 20;
};

/// In-place unitary gate application with stride arithmetic per target
/// qubit; Measure/Reset are rejected.
void apply_gate(StateVector& sv, const Gate& g);

/// Sequential application of every gate to |0...0>. The circuit must be
/// measurement-free.
StateVector run_ideal(const Circuit& c, const IdealSimOptions& opts = {});

/// Exact outcome distribution of a circuit whose trailing gates are its
/// measurements (mid-circuit measurement is rejected). Unmeasured qubits
/// are marginalized out.
OutcomeDistribution measure_distribution(const Circuit& c, const IdealSimOptions& opts = {});

}  // namespace qbench
