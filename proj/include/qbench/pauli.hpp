#pragma once

#include <string>
#include <vector>

#include "qbench/linalg.hpp"

namespace qbench {

/// Hermitian matrix over n qubits; basis index bit k is qubit k.
struct HermitianOperator {
    CMatrix matrix;
    int num_qubits = 0;

    void validate(double tol = 1e-12) const;
};

/// Weighted Pauli string. The string reads most significant qubit first:
/// character c acts on qubit (n-1-c), matching tensor-product order, so
/// "IX" is X on qubit 0 of a two-qubit system.
struct PauliTerm {
    std::string string;
    double coefficient = 0.0;
};

struct PauliDecomposition {
    std::vector<PauliTerm> terms;  // lexicographic by string, coefficients nonzero
    int num_qubits = 0;

    CMatrix reconstruct() const;
};

CMatrix pauli_string_matrix(const std::string& s);

/// Two Pauli strings commute iff they disagree on an even number of
/// positions where both are non-identity.
bool pauli_strings_commute(const std::string& a, const std::string& b);
bool all_terms_commute(const PauliDecomposition& d);

/// Coefficients alpha_s = tr(sigma_s H)/2^n over every string; terms with
/// |alpha| < 1e-12 are dropped. Rejects non-Hermitian input.
PauliDecomposition pauli_decompose(const HermitianOperator& h);

}  // namespace qbench
