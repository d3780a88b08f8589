#include "qbench/statevector.hpp"

#include <array>
#include <cmath>

namespace qbench {

StateVector StateVector::zero_state(int num_qubits) {
    StateVector sv;
    sv.num_qubits = num_qubits;
    sv.amps.assign(std::size_t{1} << num_qubits, cxd{0.0, 0.0});
    sv.amps[0] = 1.0;
    return sv;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

namespace {

void apply_1q(StateVector& sv, const CMatrix& m, int q) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t n = sv.amps.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i & bit) continue;
        const cxd a0 = sv.amps[i];
        const cxd a1 = sv.amps[i | bit];
        sv.amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
        sv.amps[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

// Generic k-qubit gather/apply/scatter; local basis bit j is operands[j].
void apply_kq(StateVector& sv, const CMatrix& m, const std::vector<int>& qs) {
    const std::size_t k = qs.size();
    const std::size_t dim = std::size_t{1} << k;
    std::size_t gate_mask = 0;
    for (int q : qs) gate_mask |= std::size_t{1} << q;

    std::array<cxd, 8> in{}, out{};
    const std::size_t n = sv.amps.size();
    for (std::size_t base = 0; base < n; ++base) {
        if (base & gate_mask) continue;
        for (std::size_t l = 0; l < dim; ++l) {
            std::size_t idx = base;
            for (std::size_t j = 0; j < k; ++j)
                if (l & (std::size_t{1} << j)) idx |= std::size_t{1} << qs[j];
            in[l] = sv.amps[idx];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            cxd acc{0.0, 0.0};
            for (std::size_t cidx = 0; cidx < dim; ++cidx) acc += m(r, cidx) * in[cidx];
            out[r] = acc;
        }
        for (std::size_t l = 0; l < dim; ++l) {
            std::size_t idx = base;
            for (std::size_t j = 0; j < k; ++j)
                if (l & (std::size_t{1} << j)) idx |= std::size_t{1} << qs[j];
            sv.amps[idx] = out[l];
        }
    }
}

void apply_mcx(StateVector& sv, const std::vector<int>& qs) {
    std::size_t control_mask = 0;
    for (std::size_t j = 0; j + 1 < qs.size(); ++j) control_mask |= std::size_t{1} << qs[j];
    const std::size_t target_bit = std::size_t{1} << qs.back();
    const std::size_t n = sv.amps.size();
    for (std::size_t i = 0; i < n; ++i)
        if ((i & control_mask) == control_mask && !(i & target_bit))
            std::swap(sv.amps[i], sv.amps[i | target_bit]);
}

}  // namespace

void apply_gate(StateVector& sv, const Gate& g) {
    if (!kind_is_unitary(g.kind))
        throw std::invalid_argument("unsupported gate kind in statevector simulation: " +
                                    kind_name(g.kind));
    if (g.kind == GateKind::MCX) {
        apply_mcx(sv, g.operands);
        return;
    }
    if (g.operands.size() == 1) {
        apply_1q(sv, gate_matrix(g), g.operands[0]);
        return;
    }
    apply_kq(sv, gate_matrix(g), g.operands);
}

StateVector run_ideal(const Circuit& c, const IdealSimOptions& opts) {
    if (c.num_qubits() > opts.max_qubits)
        throw SimCapExceeded("statevector cap of " + std::to_string(opts.max_qubits) +
                             " qubits exceeded by " + std::to_string(c.num_qubits()));
    StateVector sv = StateVector::zero_state(c.num_qubits());
    for (const auto& g : c.gates()) apply_gate(sv, g);
    return sv;
}

OutcomeDistribution measure_distribution(const Circuit& c, const IdealSimOptions& opts) {
    if (!c.has_measurement())
        throw std::invalid_argument("circuit has no measurement gates");
    if (!c.measurements_final())
        throw std::invalid_argument("mid-circuit measurement is not supported");

    Circuit body(c.num_qubits(), 0, c.label());
    std::vector<int> clbit_to_qubit(static_cast<std::size_t>(c.num_clbits()), -1);
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Measure) {
            int cb = *g.clbit;
            if (clbit_to_qubit[static_cast<std::size_t>(cb)] != -1)
                throw std::invalid_argument("classical bit measured twice");
            clbit_to_qubit[static_cast<std::size_t>(cb)] = g.operands[0];
        } else {
            body.add(g);
        }
    }
    for (int cb = 0; cb < c.num_clbits(); ++cb)
        if (clbit_to_qubit[static_cast<std::size_t>(cb)] == -1)
            throw std::invalid_argument("classical bit " + std::to_string(cb) + " never written");

    const StateVector sv = run_ideal(body, opts);

    OutcomeDistribution dist;
    dist.num_clbits = c.num_clbits();
    std::vector<double> acc(std::size_t{1} << c.num_clbits(), 0.0);
    for (std::size_t i = 0; i < sv.amps.size(); ++i) {
        const double p = std::norm(sv.amps[i]);
        if (p == 0.0) continue;
        std::uint64_t value = 0;
        for (int cb = 0; cb < c.num_clbits(); ++cb)
            if (i & (std::size_t{1} << clbit_to_qubit[static_cast<std::size_t>(cb)]))
                value |= std::uint64_t{1} << cb;
        acc[value] += p;
    }
    for (std::size_t v = 0; v < acc.size(); ++v)
        if (acc[v] > 1e-15) dist.probs[label_of_value(v, c.num_clbits())] = acc[v];
    return dist;
}

}  // namespace qbench
