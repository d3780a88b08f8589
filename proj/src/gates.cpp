#include "qbench/gates.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace qbench {

bool kind_is_parameterized(GateKind k) {
    switch (k) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::Phase:
        case GateKind::CPhase:
            return true;
        default:
            return false;
    }
}

bool kind_is_unitary(GateKind k) {
    return k != GateKind::Measure && k != GateKind::Reset;
}

int kind_fixed_arity(GateKind k) {
    switch (k) {
        case GateKind::X: case GateKind::Y: case GateKind::Z: case GateKind::H:
        case GateKind::S: case GateKind::Sdg: case GateKind::T: case GateKind::Tdg:
        case GateKind::RX: case GateKind::RY: case GateKind::RZ: case GateKind::Phase:
        case GateKind::Measure: case GateKind::Reset:
            return 1;
        case GateKind::CX: case GateKind::CZ: case GateKind::CPhase: case GateKind::Swap:
            return 2;
        case GateKind::CCX:
            return 3;
        case GateKind::MCX:
        case GateKind::Unitary:
            return -1;
    }
    return -1;
}

std::string kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::Phase: return "phase";
        case GateKind::CX: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::CPhase: return "cphase";
        case GateKind::Swap: return "swap";
        case GateKind::CCX: return "ccx";
        case GateKind::MCX: return "mcx";
        case GateKind::Unitary: return "unitary";
        case GateKind::Measure: return "measure";
        case GateKind::Reset: return "reset";
    }
    return "?";
}

std::optional<GateKind> kind_from_name(const std::string& name) {
    static const std::map<std::string, GateKind> table = {
        {"x", GateKind::X}, {"y", GateKind::Y}, {"z", GateKind::Z}, {"h", GateKind::H},
        {"s", GateKind::S}, {"sdg", GateKind::Sdg}, {"t", GateKind::T}, {"tdg", GateKind::Tdg},
        {"rx", GateKind::RX}, {"ry", GateKind::RY}, {"rz", GateKind::RZ},
        {"phase", GateKind::Phase}, {"p", GateKind::Phase},
        {"cx", GateKind::CX}, {"cnot", GateKind::CX}, {"cz", GateKind::CZ},
        {"cphase", GateKind::CPhase}, {"cp", GateKind::CPhase},
        {"swap", GateKind::Swap}, {"ccx", GateKind::CCX}, {"toffoli", GateKind::CCX},
        {"mcx", GateKind::MCX}, {"unitary", GateKind::Unitary},
        {"measure", GateKind::Measure}, {"reset", GateKind::Reset},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

CMatrix mat2(cxd a, cxd b, cxd c, cxd d) {
    CMatrix m(2);
    m(0, 0) = a; m(0, 1) = b;
    m(1, 0) = c; m(1, 1) = d;
    return m;
}

const cxd I_UNIT{0.0, 1.0};

CMatrix one_qubit_matrix(GateKind k, double angle) {
    const double s2 = 1.0 / std::sqrt(2.0);
    switch (k) {
        case GateKind::X: return mat2(0, 1, 1, 0);
        case GateKind::Y: return mat2(0, -I_UNIT, I_UNIT, 0);
        case GateKind::Z: return mat2(1, 0, 0, -1);
        case GateKind::H: return mat2(s2, s2, s2, -s2);
        case GateKind::S: return mat2(1, 0, 0, I_UNIT);
        case GateKind::Sdg: return mat2(1, 0, 0, -I_UNIT);
        case GateKind::T: return mat2(1, 0, 0, std::exp(I_UNIT * (M_PI / 4.0)));
        case GateKind::Tdg: return mat2(1, 0, 0, std::exp(-I_UNIT * (M_PI / 4.0)));
        case GateKind::RX:
            return mat2(std::cos(angle / 2), -I_UNIT * std::sin(angle / 2),
                        -I_UNIT * std::sin(angle / 2), std::cos(angle / 2));
        case GateKind::RY:
            return mat2(std::cos(angle / 2), -std::sin(angle / 2),
                        std::sin(angle / 2), std::cos(angle / 2));
        case GateKind::RZ:
            return mat2(std::exp(-I_UNIT * (angle / 2)), 0, 0, std::exp(I_UNIT * (angle / 2)));
        case GateKind::Phase:
            return mat2(1, 0, 0, std::exp(I_UNIT * angle));
        default:
            throw std::invalid_argument("not a one-qubit gate: " + kind_name(k));
    }
}

}  // namespace

CMatrix gate_matrix(const Gate& g) {
    if (!kind_is_unitary(g.kind))
        throw std::invalid_argument("gate has no unitary matrix: " + kind_name(g.kind));
    const double angle = g.angle.value_or(0.0);
    const std::size_t arity = g.operands.size();
    switch (g.kind) {
        case GateKind::Unitary:
            return g.matrix.value();
        case GateKind::CX: {
            // local basis |c t>, c = bit0
            CMatrix m = CMatrix::identity(4);
            m(1, 1) = 0; m(3, 3) = 0; m(1, 3) = 1; m(3, 1) = 1;
            return m;
        }
        case GateKind::CZ: {
            CMatrix m = CMatrix::identity(4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::CPhase: {
            CMatrix m = CMatrix::identity(4);
            m(3, 3) = std::exp(I_UNIT * angle);
            return m;
        }
        case GateKind::Swap: {
            CMatrix m(4);
            m(0, 0) = 1; m(3, 3) = 1; m(1, 2) = 1; m(2, 1) = 1;
            return m;
        }
        case GateKind::CCX:
        case GateKind::MCX: {
            if (arity > 3)
                throw std::invalid_argument("gate_matrix: mcx wider than three qubits");
            const std::size_t dim = std::size_t{1} << arity;
            CMatrix m = CMatrix::identity(dim);
            // controls are bits 0..arity-2, target is the top bit
            const std::size_t all_controls = (dim >> 1) - 1;
            const std::size_t target_bit = dim >> 1;
            m(all_controls, all_controls) = 0;
            m(all_controls | target_bit, all_controls | target_bit) = 0;
            m(all_controls, all_controls | target_bit) = 1;
            m(all_controls | target_bit, all_controls) = 1;
            return m;
        }
        default:
            return one_qubit_matrix(g.kind, angle);
    }
}

Gate make_gate(GateKind k, std::vector<int> qs) {
    if (kind_is_parameterized(k))
        throw std::invalid_argument("angle required for " + kind_name(k));
    return Gate{k, std::move(qs), std::nullopt, std::nullopt, std::nullopt};
}

Gate make_rotation(GateKind k, double angle, std::vector<int> qs) {
    if (!kind_is_parameterized(k))
        throw std::invalid_argument("angle not accepted by " + kind_name(k));
    return Gate{k, std::move(qs), angle, std::nullopt, std::nullopt};
}

Gate make_measure(int qubit, int clbit) {
    return Gate{GateKind::Measure, {qubit}, std::nullopt, clbit, std::nullopt};
}

Gate make_unitary(CMatrix m, std::vector<int> qs) {
    const std::size_t dim = std::size_t{1} << qs.size();
    if (m.dim != dim) throw std::invalid_argument("unitary dimension does not match operand count");
    if (qs.size() > 3) throw std::invalid_argument("opaque unitaries limited to three qubits");
    return Gate{GateKind::Unitary, std::move(qs), std::nullopt, std::nullopt, std::move(m)};
}

}  // namespace qbench
