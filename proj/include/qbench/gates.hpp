#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbench/linalg.hpp"

namespace qbench {

enum class GateKind {
    X, Y, Z, H, S, Sdg, T, Tdg,
    RX, RY, RZ, Phase,
    CX, CZ, CPhase, Swap,
    CCX, MCX,
    Unitary,
    Measure, Reset,
};

/// One circuit instruction. Operands are qubit indices; bit k of a gate's
/// local basis index is operands[k] (so for CX, operands[0] is the control).
/// Parameterized kinds carry `angle`; Measure carries `clbit`; Unitary
/// carries its matrix (dim 2^operands, at most three qubits).
struct Gate {
    GateKind kind;
    std::vector<int> operands;
    std::optional<double> angle;
    std::optional<int> clbit;
    std::optional<CMatrix> matrix;
};

bool kind_is_parameterized(GateKind k);
bool kind_is_unitary(GateKind k);   // everything except Measure/Reset
int kind_fixed_arity(GateKind k);   // -1 for MCX/Unitary (variable)

std::string kind_name(GateKind k);
std::optional<GateKind> kind_from_name(const std::string& name);

/// Matrix of a unitary gate over its own operands, local-basis convention
/// above. Defined for arities up to three (MCX wider than that is applied
/// by the simulators directly, not through a dense matrix).
CMatrix gate_matrix(const Gate& g);

// Convenience constructors.
Gate make_gate(GateKind k, std::vector<int> qs);
Gate make_rotation(GateKind k, double angle, std::vector<int> qs);
Gate make_measure(int qubit, int clbit);
Gate make_unitary(CMatrix m, std::vector<int> qs);

}  // namespace qbench
