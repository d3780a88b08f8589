#pragma once

#include <string>
#include <vector>

#include "qbench/gates.hpp"

namespace qbench {

/// Ordered gate sequence over a fixed qubit/classical-bit register.
/// Immutable in spirit: builder methods append and validate, nothing else
/// mutates. Classical bit k is the least significant bit of the decimal
/// outcome labels used in reports.
class Circuit {
public:
    Circuit(int num_qubits, int num_clbits, std::string label = "")
        : num_qubits_(num_qubits), num_clbits_(num_clbits), label_(std::move(label)) {
        if (num_qubits < 0 || num_clbits < 0)
            throw std::invalid_argument("circuit register sizes must be nonnegative");
    }

    int num_qubits() const { return num_qubits_; }
    int num_clbits() const { return num_clbits_; }
    const std::string& label() const { return label_; }
    const std::vector<Gate>& gates() const { return gates_; }

    void add(Gate g);

    // Shorthand appenders.
    Circuit& x(int q) { add(make_gate(GateKind::X, {q})); return *this; }
    Circuit& y(int q) { add(make_gate(GateKind::Y, {q})); return *this; }
    Circuit& z(int q) { add(make_gate(GateKind::Z, {q})); return *this; }
    Circuit& h(int q) { add(make_gate(GateKind::H, {q})); return *this; }
    Circuit& s(int q) { add(make_gate(GateKind::S, {q})); return *this; }
    Circuit& sdg(int q) { add(make_gate(GateKind::Sdg, {q})); return *this; }
    Circuit& t(int q) { add(make_gate(GateKind::T, {q})); return *this; }
    Circuit& tdg(int q) { add(make_gate(GateKind::Tdg, {q})); return *this; }
    Circuit& rx(double a, int q) { add(make_rotation(GateKind::RX, a, {q})); return *this; }
    Circuit& ry(double a, int q) { add(make_rotation(GateKind::RY, a, {q})); return *this; }
    Circuit& rz(double a, int q) { add(make_rotation(GateKind::RZ, a, {q})); return *this; }
    Circuit& phase(double a, int q) { add(make_rotation(GateKind::Phase, a, {q})); return *this; }
    Circuit& cx(int c, int t) { add(make_gate(GateKind::CX, {c, t})); return *this; }
    Circuit& cz(int c, int t) { add(make_gate(GateKind::CZ, {c, t})); return *this; }
    Circuit& cphase(double a, int c, int t) { add(make_rotation(GateKind::CPhase, a, {c, t})); return *this; }
    Circuit& swap(int a, int b) { add(make_gate(GateKind::Swap, {a, b})); return *this; }
    Circuit& ccx(int c0, int c1, int t) { add(make_gate(GateKind::CCX, {c0, c1, t})); return *this; }
    Circuit& mcx(std::vector<int> controls_then_target) { add(make_gate(GateKind::MCX, std::move(controls_then_target))); return *this; }
    Circuit& unitary(CMatrix m, std::vector<int> qs) { add(make_unitary(std::move(m), std::move(qs))); return *this; }
    Circuit& measure(int q, int c) { add(make_measure(q, c)); return *this; }

    /// True when every Measure comes after every non-Measure gate.
    bool measurements_final() const;
    bool has_measurement() const;

private:
    int num_qubits_;
    int num_clbits_;
    std::string label_;
    std::vector<Gate> gates_;
};

struct CircuitStats {
    int gate_count = 0;
    int workspace = 0;  // distinct qubits touched
    int depth = 0;      // longest dependency chain, measurements counted
};

/// Gate count, workspace and depth. Depth propagates a per-qubit frontier:
/// each gate sits one layer past the deepest frontier among its operands.
CircuitStats circuit_stats(const Circuit& c);

/// Rewrites CCX/MCX into one- and two-qubit gates. CCX uses the standard
/// six-CX Toffoli network over {H, T, Tdg, CX}; wider MCX lowers through a
/// multi-controlled-Z phase network over {H, CX, Phase}. Other gates pass
/// through unchanged.
Circuit macro_expand(const Circuit& c);

/// Adjoint of a measurement-free circuit: gates reversed, each inverted.
Circuit inverse_circuit(const Circuit& c);

}  // namespace qbench
