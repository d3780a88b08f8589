#pragma once

#include <iosfwd>
#include <string>

#include "qbench/algorithms.hpp"
#include "qbench/circuit.hpp"
#include "qbench/distribution.hpp"
#include "qbench/metrics.hpp"
#include "qbench/pauli.hpp"

namespace qbench {

/// Line-oriented circuit text. First significant line declares the
/// registers, then one gate per line:
///
///   qubits 3 clbits 2
///   h 0
///   rz 0.7853981633974483 2
///   cx 0 1
///   mcx 0 1 2
///   measure 0 -> 0
///
/// Parameterized kinds take the angle before the qubit operands; '#' starts
/// a comment. Opaque unitaries have no text form.
Circuit parse_circuit(std::istream& in, const std::string& origin = "<stream>");
Circuit load_circuit(const std::string& path);
std::string serialize_circuit(const Circuit& c);

/// Counts file: {"shots": N, "counts": {"01": n, ...}, "machine": ...,
/// "timestamp": ...}. Shared by sampled output and hardware ingestion.
Counts parse_counts(std::istream& in, const std::string& origin = "<stream>");
Counts load_counts(const std::string& path);
void write_counts(const Counts& c, const std::string& path);

std::string distribution_json(const OutcomeDistribution& d);

std::string decomposition_json(const PauliDecomposition& d);
PauliDecomposition parse_decomposition(std::istream& in, const std::string& origin = "<stream>");

/// Hermitian operator file: {"num_qubits": n, "matrix": [[re, im], ...]}
/// with 4^n row-major entries.
HermitianOperator load_hermitian(const std::string& path);

AlgorithmConfig algorithm_config_from_json_text(const std::string& text);
std::string algorithm_config_json(const AlgorithmConfig& config);

std::string report_json(const BenchmarkReport& r);

std::string iso8601_now();

}  // namespace qbench
