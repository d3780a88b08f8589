// Brute-force reference implementations used only by tests. Gate matrices,
// full-space embedding and channel algebra are written out independently of
// the library's strided simulators so the two can check each other.
#pragma once

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "qbench/architecture.hpp"
#include "qbench/circuit.hpp"
#include "qbench/distribution.hpp"
#include "qbench/linalg.hpp"
#include "qbench/pauli.hpp"

namespace oracle {

using qbench::CMatrix;
using qbench::cxd;

inline CMatrix m2(cxd a, cxd b, cxd c, cxd d) {
    CMatrix m(2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    return m;
}

inline CMatrix dense_gate_matrix(const qbench::Gate& g) {
    using qbench::GateKind;
    const cxd i{0.0, 1.0};
    const double ang = g.angle.value_or(0.0);
    const double s2 = std::sqrt(0.5);
    switch (g.kind) {
        case GateKind::X: return m2(0, 1, 1, 0);
        case GateKind::Y: return m2(0, -i, i, 0);
        case GateKind::Z: return m2(1, 0, 0, -1);
        case GateKind::H: return m2(s2, s2, s2, -s2);
        case GateKind::S: return m2(1, 0, 0, i);
        case GateKind::Sdg: return m2(1, 0, 0, -i);
        case GateKind::T: return m2(1, 0, 0, std::polar(1.0, M_PI / 4));
        case GateKind::Tdg: return m2(1, 0, 0, std::polar(1.0, -M_PI / 4));
        case GateKind::RX:
            return m2(std::cos(ang / 2), -i * std::sin(ang / 2), -i * std::sin(ang / 2),
                      std::cos(ang / 2));
        case GateKind::RY:
            return m2(std::cos(ang / 2), -std::sin(ang / 2), std::sin(ang / 2), std::cos(ang / 2));
        case GateKind::RZ:
            return m2(std::polar(1.0, -ang / 2), 0, 0, std::polar(1.0, ang / 2));
        case GateKind::Phase: return m2(1, 0, 0, std::polar(1.0, ang));
        default: break;
    }
    // controlled kinds over local bits (bit k = operands[k], target last)
    const std::size_t arity = g.operands.size();
    const std::size_t dim = std::size_t{1} << arity;
    CMatrix m(dim);
    switch (g.kind) {
        case GateKind::CX:
            for (std::size_t b = 0; b < dim; ++b) m(b & 1 ? b ^ 2 : b, b) = 1;
            return m;
        case GateKind::CZ:
            for (std::size_t b = 0; b < dim; ++b) m(b, b) = (b == 3 ? -1 : 1);
            return m;
        case GateKind::CPhase:
            for (std::size_t b = 0; b < dim; ++b)
                m(b, b) = (b == 3 ? std::polar(1.0, ang) : cxd{1, 0});
            return m;
        case GateKind::Swap:
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t swapped = (b & ~std::size_t{3}) | ((b & 1) << 1) | ((b >> 1) & 1);
                m(swapped, b) = 1;
            }
            return m;
        case GateKind::CCX:
        case GateKind::MCX: {
            const std::size_t controls = (dim >> 1) - 1;
            for (std::size_t b = 0; b < dim; ++b)
                m((b & controls) == controls ? b ^ (dim >> 1) : b, b) = 1;
            return m;
        }
        case GateKind::Unitary:
            return *g.matrix;
        default:
            throw std::invalid_argument("oracle: no matrix for " + qbench::kind_name(g.kind));
    }
}

/// Entrywise embedding of a k-qubit operator into the full 2^n space.
inline CMatrix embed(const CMatrix& g, const std::vector<int>& qs, int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::size_t mask = 0;
    for (int q : qs) mask |= std::size_t{1} << q;
    auto local = [&](std::size_t full) {
        std::size_t l = 0;
        for (std::size_t k = 0; k < qs.size(); ++k)
            if (full & (std::size_t{1} << qs[k])) l |= std::size_t{1} << k;
        return l;
    };
    CMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if ((r & ~mask) == (c & ~mask)) out(r, c) = g(local(r), local(c));
    return out;
}

/// Full unitary of a measurement-free circuit: product of embedded gates.
inline CMatrix circuit_unitary(const qbench::Circuit& c) {
    CMatrix u = CMatrix::identity(std::size_t{1} << c.num_qubits());
    for (const auto& g : c.gates())
        u = qbench::matmul(embed(dense_gate_matrix(g), g.operands, c.num_qubits()), u);
    return u;
}

inline qbench::OutcomeDistribution marginal(const std::vector<double>& per_basis,
                                            const std::vector<int>& clbit_to_qubit,
                                            int num_clbits) {
    std::vector<double> acc(std::size_t{1} << num_clbits, 0.0);
    for (std::size_t b = 0; b < per_basis.size(); ++b) {
        std::uint64_t v = 0;
        for (int cb = 0; cb < num_clbits; ++cb)
            if (b & (std::size_t{1} << clbit_to_qubit[static_cast<std::size_t>(cb)]))
                v |= std::uint64_t{1} << cb;
        acc[v] += per_basis[b];
    }
    qbench::OutcomeDistribution dist;
    dist.num_clbits = num_clbits;
    for (std::size_t v = 0; v < acc.size(); ++v)
        if (acc[v] > 0.0) dist.probs[qbench::label_of_value(v, num_clbits)] = acc[v];
    return dist;
}

/// Ideal measured distribution through the dense unitary product.
inline qbench::OutcomeDistribution ideal_distribution(const qbench::Circuit& c) {
    qbench::Circuit body(c.num_qubits(), 0);
    std::vector<int> clbit_to_qubit(static_cast<std::size_t>(c.num_clbits()), -1);
    for (const auto& g : c.gates()) {
        if (g.kind == qbench::GateKind::Measure)
            clbit_to_qubit[static_cast<std::size_t>(*g.clbit)] = g.operands[0];
        else
            body.add(g);
    }
    const CMatrix u = circuit_unitary(body);
    std::vector<double> per_basis(u.dim);
    for (std::size_t b = 0; b < u.dim; ++b) per_basis[b] = std::norm(u(b, 0));
    return marginal(per_basis, clbit_to_qubit, c.num_clbits());
}

// ---- dense channel algebra ----

inline std::vector<CMatrix> depolarizing_ops(double p, int arity) {
    const char* letters = "IXYZ";
    auto pauli = [&](char l) {
        switch (l) {
            case 'X': return m2(0, 1, 1, 0);
            case 'Y': return m2(0, cxd{0, -1}, cxd{0, 1}, 0);
            case 'Z': return m2(1, 0, 0, -1);
            default: return m2(1, 0, 0, 1);
        }
    };
    std::vector<CMatrix> ops;
    if (arity == 1) {
        ops.push_back(qbench::scale(CMatrix::identity(2), std::sqrt(1 - p)));
        for (int k = 1; k < 4; ++k)
            ops.push_back(qbench::scale(pauli(letters[k]), std::sqrt(p / 3)));
    } else {
        ops.push_back(qbench::scale(CMatrix::identity(4), std::sqrt(1 - p)));
        for (int hi = 0; hi < 4; ++hi)
            for (int lo = 0; lo < 4; ++lo) {
                if (hi == 0 && lo == 0) continue;
                ops.push_back(qbench::scale(qbench::kron(pauli(letters[hi]), pauli(letters[lo])),
                                            std::sqrt(p / 15)));
            }
    }
    return ops;
}

inline void apply_kraus_dense(CMatrix& rho, const std::vector<CMatrix>& ops,
                              const std::vector<int>& qs, int n) {
    CMatrix acc(rho.dim);
    for (const auto& k : ops) {
        const CMatrix ke = embed(k, qs, n);
        acc = qbench::add(acc, qbench::matmul(qbench::matmul(ke, rho), qbench::dagger(ke)));
    }
    rho = acc;
}

/// Closed-form thermal relaxation on one qubit of a dense density matrix:
/// populations relax toward |0>, coherences shrink by
/// sqrt(1-gamma) * exp(-duration/T_phi).
inline void apply_relaxation_closed_form(CMatrix& rho, int q, int n, double t1, double t2,
                                         double duration) {
    const double gamma = 1.0 - std::exp(-duration / t1);
    const double rate_phi = std::max(0.0, 1.0 / t2 - 0.5 / t1);
    const double coh = std::sqrt(1.0 - gamma) * std::exp(-duration * rate_phi);
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = std::size_t{1} << n;
    CMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const bool br = r & bit, bc = c & bit;
            if (!br && !bc) out(r, c) = rho(r, c) + gamma * rho(r | bit, c | bit);
            else if (br && bc) out(r, c) = (1.0 - gamma) * rho(r, c);
            else out(r, c) = coh * rho(r, c);
        }
    rho = out;
}

/// Noisy distribution for circuits already satisfying the coupling map
/// (intended for all-to-all fixtures so no routing enters the comparison).
inline qbench::OutcomeDistribution noisy_distribution(const qbench::Circuit& circuit,
                                                      const qbench::ArchitectureSpec& arch) {
    const qbench::Circuit c = qbench::macro_expand(circuit);
    const int n = c.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    CMatrix rho(dim);
    rho(0, 0) = 1.0;

    for (int q = 0; q < n; ++q) {
        const double pm = arch.noise.lookup_prep(q);
        if (pm > 0.0) {
            std::vector<CMatrix> ops{qbench::scale(CMatrix::identity(2), std::sqrt(1 - pm)),
                                     qbench::scale(m2(0, 1, 1, 0), std::sqrt(pm))};
            apply_kraus_dense(rho, ops, {q}, n);
        }
    }

    std::vector<int> clbit_to_qubit(static_cast<std::size_t>(c.num_clbits()), -1);
    std::vector<double> flip(static_cast<std::size_t>(c.num_clbits()), 0.0);
    for (const auto& g : c.gates()) {
        if (g.kind == qbench::GateKind::Measure) {
            clbit_to_qubit[static_cast<std::size_t>(*g.clbit)] = g.operands[0];
            flip[static_cast<std::size_t>(*g.clbit)] = arch.noise.lookup_meas(g.operands[0]);
            continue;
        }
        const CMatrix ue = embed(dense_gate_matrix(g), g.operands, n);
        rho = qbench::matmul(qbench::matmul(ue, rho), qbench::dagger(ue));

        const int arity = static_cast<int>(g.operands.size());
        const double p = arity == 1
                             ? arch.noise.lookup_1q(g.kind, g.operands[0])
                             : arch.noise.lookup_2q(g.kind,
                                                    qbench::make_edge(g.operands[0], g.operands[1]));
        if (p > 0.0) apply_kraus_dense(rho, depolarizing_ops(p, arity), g.operands, n);

        const double dur_us = arch.duration_ns(g.kind, arity) / 1000.0;
        if (dur_us > 0.0)
            for (int q : g.operands)
                apply_relaxation_closed_form(rho, q, n, arch.noise.lookup_t1(q),
                                             arch.noise.lookup_t2(q), dur_us);
    }

    std::vector<double> per_basis(dim);
    for (std::size_t b = 0; b < dim; ++b) per_basis[b] = rho(b, b).real();
    qbench::OutcomeDistribution dist = marginal(per_basis, clbit_to_qubit, c.num_clbits());

    // readout confusion
    std::vector<double> acc(std::size_t{1} << c.num_clbits(), 0.0);
    for (const auto& [label, p] : dist.probs) acc[qbench::value_of_label(label)] = p;
    for (int cb = 0; cb < c.num_clbits(); ++cb) {
        const double ps = flip[static_cast<std::size_t>(cb)];
        if (ps == 0.0) continue;
        std::vector<double> next(acc.size());
        for (std::size_t v = 0; v < acc.size(); ++v)
            next[v] = (1 - ps) * acc[v] + ps * acc[v ^ (std::size_t{1} << cb)];
        acc = std::move(next);
    }
    qbench::OutcomeDistribution out;
    out.num_clbits = c.num_clbits();
    for (std::size_t v = 0; v < acc.size(); ++v)
        if (acc[v] > 0.0) out.probs[qbench::label_of_value(v, out.num_clbits)] = acc[v];
    return out;
}

/// Literal evaluation of the distance formula over the explicit key union.
inline double hellinger_literal(const qbench::OutcomeDistribution& p,
                                const qbench::OutcomeDistribution& q) {
    std::map<std::string, std::pair<double, double>> joined;
    for (const auto& [label, v] : p.probs) joined[label].first = v;
    for (const auto& [label, v] : q.probs) joined[label].second = v;
    double sum = 0.0;
    for (const auto& [label, pq] : joined) {
        const double d = std::sqrt(pq.first) - std::sqrt(pq.second);
        sum += d * d;
    }
    return (1.0 / std::sqrt(2.0)) * std::sqrt(sum);
}

// ---- random fixtures ----

inline qbench::HermitianOperator random_hermitian(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t dim = std::size_t{1} << n;
    CMatrix a(dim);
    for (auto& v : a.a) v = cxd{u(rng), u(rng)};
    CMatrix h = qbench::scale(qbench::add(a, qbench::dagger(a)), 0.5);
    return {h, n};
}

/// Random measurement-terminated circuit over the unitary gate kinds.
inline qbench::Circuit random_circuit(int num_qubits, int num_gates, std::mt19937& rng) {
    using qbench::GateKind;
    static const std::vector<GateKind> kinds = {
        GateKind::X,  GateKind::Y,   GateKind::Z,     GateKind::H,    GateKind::S,
        GateKind::Sdg, GateKind::T,  GateKind::Tdg,   GateKind::RX,   GateKind::RY,
        GateKind::RZ, GateKind::Phase, GateKind::CX,  GateKind::CZ,   GateKind::CPhase,
        GateKind::Swap, GateKind::CCX};
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    qbench::Circuit c(num_qubits, num_qubits);
    int emitted = 0;
    while (emitted < num_gates) {
        const GateKind k = kinds[rng() % kinds.size()];
        const int arity = qbench::kind_fixed_arity(k);
        if (arity > num_qubits) continue;
        std::vector<int> qs;
        while (static_cast<int>(qs.size()) < arity) {
            int q = static_cast<int>(rng() % static_cast<unsigned>(num_qubits));
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
        }
        if (qbench::kind_is_parameterized(k)) c.add(qbench::make_rotation(k, angle(rng), qs));
        else c.add(qbench::make_gate(k, qs));
        ++emitted;
    }
    for (int q = 0; q < num_qubits; ++q) c.measure(q, q);
    return c;
}

}  // namespace oracle
