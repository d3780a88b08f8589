#pragma once

#include <string>
#include <vector>

#include "qbench/linalg.hpp"

namespace qbench {

/// Completely positive trace-preserving map as a list of equal-dimension
/// Kraus operators satisfying sum K^dag K = I.
struct KrausChannel {
    std::vector<CMatrix> operators;
    std::string label;

    std::size_t dim() const { return operators.empty() ? 0 : operators.front().dim; }
    bool is_identity() const;

    /// Throws std::invalid_argument when the completeness sum deviates from
    /// identity by more than tol.
    void validate(double tol = 1e-10) const;
};

/// Uniform Pauli noise. Arity 1 mixes X, Y, Z each with weight p/3; arity 2
/// spreads total weight p over the fifteen non-identity two-qubit Paulis.
/// p = 0 degenerates to a single identity operator.
KrausChannel depolarizing(double p, int arity);

/// Amplitude damping at rate 1/T1 composed with pure dephasing at rate
/// 1/T_phi = 1/T2 - 1/(2 T1), both over `duration`. Times and duration in
/// the same unit. Requires T2 <= 2*T1.
KrausChannel thermal_relaxation(double t1, double t2, double duration);

/// Symmetric classical bit flip (preparation error model).
KrausChannel bit_flip(double p);

}  // namespace qbench
