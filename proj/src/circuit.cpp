#include "qbench/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qbench {

void Circuit::add(Gate g) {
    const int arity = kind_fixed_arity(g.kind);
    if (arity >= 0 && static_cast<int>(g.operands.size()) != arity)
        throw std::invalid_argument(kind_name(g.kind) + " expects " + std::to_string(arity) +
                                    " operand(s)");
    if (g.kind == GateKind::MCX && g.operands.size() < 2)
        throw std::invalid_argument("mcx needs at least one control and a target");
    if (g.kind == GateKind::Unitary) {
        if (!g.matrix) throw std::invalid_argument("unitary gate is missing its matrix");
        if (g.operands.empty() || g.operands.size() > 3)
            throw std::invalid_argument("opaque unitaries limited to three qubits");
        if (g.matrix->dim != (std::size_t{1} << g.operands.size()))
            throw std::invalid_argument("unitary dimension does not match operand count");
    } else if (g.matrix) {
        throw std::invalid_argument("only unitary gates carry a matrix");
    }
    if (g.angle.has_value() != kind_is_parameterized(g.kind))
        throw std::invalid_argument("angle present iff the gate kind is parameterized");
    if (g.clbit.has_value() != (g.kind == GateKind::Measure))
        throw std::invalid_argument("classical target only valid on measure");

    std::set<int> seen;
    for (int q : g.operands) {
        if (q < 0 || q >= num_qubits_)
            throw std::invalid_argument("gate operand " + std::to_string(q) +
                                        " outside register of " + std::to_string(num_qubits_));
        if (!seen.insert(q).second)
            throw std::invalid_argument("gate operands must be distinct");
    }
    if (g.clbit && (*g.clbit < 0 || *g.clbit >= num_clbits_))
        throw std::invalid_argument("classical target outside register");

    gates_.push_back(std::move(g));
}

bool Circuit::measurements_final() const {
    bool seen_measure = false;
    for (const auto& g : gates_) {
        if (g.kind == GateKind::Measure)
            seen_measure = true;
        else if (seen_measure)
            return false;
    }
    return true;
}

bool Circuit::has_measurement() const {
    return std::any_of(gates_.begin(), gates_.end(),
                       [](const Gate& g) { return g.kind == GateKind::Measure; });
}

CircuitStats circuit_stats(const Circuit& c) {
    CircuitStats st;
    st.gate_count = static_cast<int>(c.gates().size());

    std::set<int> touched;
    std::vector<int> frontier(static_cast<std::size_t>(c.num_qubits()), 0);
    for (const auto& g : c.gates()) {
        int layer = 0;
        for (int q : g.operands) {
            touched.insert(q);
            layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : g.operands) frontier[static_cast<std::size_t>(q)] = layer;
        st.depth = std::max(st.depth, layer);
    }
    st.workspace = static_cast<int>(touched.size());
    return st;
}

namespace {

void emit_toffoli(Circuit& out, int c0, int c1, int t) {
    // Six-CX Toffoli over {H, T, Tdg, CX}.
    out.h(t);
    out.cx(c1, t);
    out.tdg(t);
    out.cx(c0, t);
    out.t(t);
    out.cx(c1, t);
    out.tdg(t);
    out.cx(c0, t);
    out.t(c1);
    out.t(t);
    out.h(t);
    out.cx(c0, c1);
    out.t(c0);
    out.tdg(c1);
    out.cx(c0, c1);
}

// Multi-controlled Z as a phase polynomial: pi * AND(x) expanded over the
// parities of every non-empty subset of the participating qubits, each
// parity rotated by +-pi/2^(q-1) through a CX ladder.
void emit_mcz(Circuit& out, const std::vector<int>& qs) {
    const std::size_t q = qs.size();
    const double unit = M_PI / static_cast<double>(std::size_t{1} << (q - 1));
    for (std::size_t mask = 1; mask < (std::size_t{1} << q); ++mask) {
        std::vector<int> subset;
        for (std::size_t k = 0; k < q; ++k)
            if (mask & (std::size_t{1} << k)) subset.push_back(qs[k]);
        const double theta = (subset.size() % 2 == 1) ? unit : -unit;
        for (std::size_t k = 0; k + 1 < subset.size(); ++k) out.cx(subset[k], subset[k + 1]);
        out.phase(theta, subset.back());
        for (std::size_t k = subset.size() - 1; k-- > 0;) out.cx(subset[k], subset[k + 1]);
    }
}

}  // namespace

Circuit inverse_circuit(const Circuit& c) {
    Circuit out(c.num_qubits(), c.num_clbits(), c.label());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S: g.kind = GateKind::Sdg; break;
            case GateKind::Sdg: g.kind = GateKind::S; break;
            case GateKind::T: g.kind = GateKind::Tdg; break;
            case GateKind::Tdg: g.kind = GateKind::T; break;
            case GateKind::RX: case GateKind::RY: case GateKind::RZ:
            case GateKind::Phase: case GateKind::CPhase:
                g.angle = -*g.angle;
                break;
            case GateKind::Unitary:
                g.matrix = dagger(*g.matrix);
                break;
            case GateKind::Measure: case GateKind::Reset:
                throw std::invalid_argument("cannot invert a non-unitary gate");
            default:
                break;  // self-inverse
        }
        out.add(std::move(g));
    }
    return out;
}

Circuit macro_expand(const Circuit& c) {
    Circuit out(c.num_qubits(), c.num_clbits(), c.label());
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::CCX:
                emit_toffoli(out, g.operands[0], g.operands[1], g.operands[2]);
                break;
            case GateKind::MCX: {
                if (g.operands.size() == 2) {
                    out.cx(g.operands[0], g.operands[1]);
                } else if (g.operands.size() == 3) {
                    emit_toffoli(out, g.operands[0], g.operands[1], g.operands[2]);
                } else {
                    const int target = g.operands.back();
                    out.h(target);
                    emit_mcz(out, g.operands);
                    out.h(target);
                }
                break;
            }
            default:
                out.add(g);
        }
    }
    return out;
}

}  // namespace qbench
