#include "qbench/density.hpp"

#include <algorithm>
#include <cmath>

#include "qbench/routing.hpp"

namespace qbench {

DensityMatrix DensityMatrix::zero_state(int num_qubits) {
    DensityMatrix dm;
    dm.num_qubits = num_qubits;
    dm.dim = std::size_t{1} << num_qubits;
    dm.rho.assign(dm.dim * dm.dim, cxd{0.0, 0.0});
    dm.rho[0] = 1.0;
    return dm;
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i).real();
    return t;
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = at(i, i).real();
    return d;
}

namespace {

// Indices of the 2^k strided slots reached from `base` through `qubits`.
inline std::size_t slot_index(std::size_t base, std::size_t local, const std::vector<int>& qs) {
    for (std::size_t j = 0; j < qs.size(); ++j)
        if (local & (std::size_t{1} << j)) base |= std::size_t{1} << qs[j];
    return base;
}

// rho <- M_embed * rho
void apply_left(std::vector<cxd>& rho, std::size_t dim, const CMatrix& m,
                const std::vector<int>& qs) {
    const std::size_t k = qs.size();
    const std::size_t sub = std::size_t{1} << k;
    std::size_t mask = 0;
    for (int q : qs) mask |= std::size_t{1} << q;

    std::vector<cxd> in(sub), out(sub);
    for (std::size_t col = 0; col < dim; ++col)
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & mask) continue;
            for (std::size_t l = 0; l < sub; ++l) in[l] = rho[slot_index(base, l, qs) * dim + col];
            for (std::size_t r = 0; r < sub; ++r) {
                cxd acc{0.0, 0.0};
                for (std::size_t cix = 0; cix < sub; ++cix) acc += m(r, cix) * in[cix];
                out[r] = acc;
            }
            for (std::size_t l = 0; l < sub; ++l) rho[slot_index(base, l, qs) * dim + col] = out[l];
        }
}

// rho <- rho * M_embed^dag  (each row transforms by conj(M))
void apply_right_dagger(std::vector<cxd>& rho, std::size_t dim, const CMatrix& m,
                        const std::vector<int>& qs) {
    const std::size_t k = qs.size();
    const std::size_t sub = std::size_t{1} << k;
    std::size_t mask = 0;
    for (int q : qs) mask |= std::size_t{1} << q;

    std::vector<cxd> in(sub), out(sub);
    for (std::size_t row = 0; row < dim; ++row) {
        cxd* rowp = rho.data() + row * dim;
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & mask) continue;
            for (std::size_t l = 0; l < sub; ++l) in[l] = rowp[slot_index(base, l, qs)];
            for (std::size_t r = 0; r < sub; ++r) {
                cxd acc{0.0, 0.0};
                for (std::size_t cix = 0; cix < sub; ++cix)
                    acc += std::conj(m(r, cix)) * in[cix];
                out[r] = acc;
            }
            for (std::size_t l = 0; l < sub; ++l) rowp[slot_index(base, l, qs)] = out[l];
        }
    }
}

}  // namespace

void DensityMatrix::apply_unitary(const CMatrix& u, const std::vector<int>& qubits) {
    apply_left(rho, dim, u, qubits);
    apply_right_dagger(rho, dim, u, qubits);
}

void DensityMatrix::apply_channel(const KrausChannel& ch, const std::vector<int>& qubits) {
    if (ch.is_identity()) return;
    std::vector<cxd> acc(rho.size(), cxd{0.0, 0.0});
    for (const auto& k : ch.operators) {
        std::vector<cxd> term = rho;
        apply_left(term, dim, k, qubits);
        apply_right_dagger(term, dim, k, qubits);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
    }
    rho = std::move(acc);
}

OutcomeDistribution run_noisy(const Circuit& c, const ArchitectureSpec& arch,
                              std::vector<int> layout, const NoisySimOptions& opts) {
    if (!c.has_measurement()) throw std::invalid_argument("circuit has no measurement gates");
    if (!c.measurements_final())
        throw std::invalid_argument("mid-circuit measurement is not supported");

    const Circuit routed = route(c, arch, std::move(layout));

    // Compact the register to the touched physical qubits.
    std::vector<int> phys_to_compact(static_cast<std::size_t>(arch.num_qubits), -1);
    std::vector<int> compact_to_phys;
    for (const auto& g : routed.gates())
        for (int q : g.operands)
            if (phys_to_compact[static_cast<std::size_t>(q)] == -1) {
                phys_to_compact[static_cast<std::size_t>(q)] =
                    static_cast<int>(compact_to_phys.size());
                compact_to_phys.push_back(q);
            }
    const int width = static_cast<int>(compact_to_phys.size());
    if (width > opts.max_qubits)
        throw SimCapExceeded("density-matrix cap of " + std::to_string(opts.max_qubits) +
                             " qubits exceeded by " + std::to_string(width));

    DensityMatrix dm = DensityMatrix::zero_state(width);
    for (int compact = 0; compact < width; ++compact) {
        const double pm = arch.noise.lookup_prep(compact_to_phys[static_cast<std::size_t>(compact)]);
        dm.apply_channel(bit_flip(pm), {compact});
    }

    std::vector<int> clbit_to_compact(static_cast<std::size_t>(routed.num_clbits()), -1);
    std::vector<double> readout_flip(static_cast<std::size_t>(routed.num_clbits()), 0.0);
    for (const auto& g : routed.gates()) {
        const int phys0 = g.operands[0];
        const int q0 = phys_to_compact[static_cast<std::size_t>(phys0)];
        if (g.kind == GateKind::Measure) {
            const int cb = *g.clbit;
            if (clbit_to_compact[static_cast<std::size_t>(cb)] != -1)
                throw std::invalid_argument("classical bit measured twice");
            clbit_to_compact[static_cast<std::size_t>(cb)] = q0;
            readout_flip[static_cast<std::size_t>(cb)] = arch.noise.lookup_meas(phys0);
            continue;
        }
        if (g.kind == GateKind::Reset)
            throw std::invalid_argument("reset is not supported in noisy simulation");
        if (g.kind == GateKind::Unitary && g.operands.size() > 2)
            throw std::invalid_argument("opaque unitaries wider than two qubits are not "
                                        "supported in noisy simulation");

        std::vector<int> compact_ops;
        compact_ops.reserve(g.operands.size());
        for (int q : g.operands) compact_ops.push_back(phys_to_compact[static_cast<std::size_t>(q)]);

        dm.apply_unitary(gate_matrix(g), compact_ops);

        double p_gate = 0.0;
        if (g.operands.size() == 1) {
            p_gate = arch.noise.lookup_1q(g.kind, phys0);
        } else {
            p_gate = arch.noise.lookup_2q(g.kind, make_edge(g.operands[0], g.operands[1]));
        }
        if (g.kind == GateKind::Unitary)
            p_gate = std::min(1.0, p_gate * opts.composite_charge_factor);
        if (p_gate > 0.0)
            dm.apply_channel(depolarizing(p_gate, static_cast<int>(g.operands.size())), compact_ops);

        const double dur_us =
            arch.duration_ns(g.kind, static_cast<int>(g.operands.size())) / 1000.0;
        if (dur_us > 0.0)
            for (std::size_t j = 0; j < g.operands.size(); ++j) {
                const int phys = g.operands[j];
                dm.apply_channel(thermal_relaxation(arch.noise.lookup_t1(phys),
                                                    arch.noise.lookup_t2(phys), dur_us),
                                 {compact_ops[j]});
            }
    }
    for (int cb = 0; cb < routed.num_clbits(); ++cb)
        if (clbit_to_compact[static_cast<std::size_t>(cb)] == -1)
            throw std::invalid_argument("classical bit " + std::to_string(cb) + " never written");

    // Diagonal marginal onto classical bits.
    const std::vector<double> diag = dm.diagonal();
    std::vector<double> acc(std::size_t{1} << routed.num_clbits(), 0.0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0.0) continue;
        std::uint64_t value = 0;
        for (int cb = 0; cb < routed.num_clbits(); ++cb)
            if (i & (std::size_t{1} << clbit_to_compact[static_cast<std::size_t>(cb)]))
                value |= std::uint64_t{1} << cb;
        acc[value] += diag[i];
    }

    // Classical readout confusion, bit by bit.
    for (int cb = 0; cb < routed.num_clbits(); ++cb) {
        const double ps = readout_flip[static_cast<std::size_t>(cb)];
        if (ps == 0.0) continue;
        std::vector<double> flipped(acc.size());
        for (std::size_t v = 0; v < acc.size(); ++v)
            flipped[v] = (1.0 - ps) * acc[v] + ps * acc[v ^ (std::size_t{1} << cb)];
        acc = std::move(flipped);
    }

    OutcomeDistribution dist;
    dist.num_clbits = routed.num_clbits();
    for (std::size_t v = 0; v < acc.size(); ++v)
        if (acc[v] > 1e-15) dist.probs[label_of_value(v, dist.num_clbits)] = std::max(0.0, acc[v]);
    return dist;
}

}  // namespace qbench
