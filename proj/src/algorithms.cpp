#include "qbench/algorithms.hpp"

#include <cmath>
#include <stdexcept>

#include "qbench/hamiltonian.hpp"

namespace qbench {

std::string algorithm_name(AlgorithmKind k) {
    switch (k) {
        case AlgorithmKind::DTQW: return "dtqw";
        case AlgorithmKind::CTQW: return "ctqw";
        case AlgorithmKind::PD: return "pd";
        case AlgorithmKind::QPE: return "qpe";
        case AlgorithmKind::QSa: return "qsa";
        case AlgorithmKind::QSn: return "qsn";
    }
    return "?";
}

std::optional<AlgorithmKind> algorithm_from_name(const std::string& name) {
    if (name == "dtqw") return AlgorithmKind::DTQW;
    if (name == "ctqw") return AlgorithmKind::CTQW;
    if (name == "pd") return AlgorithmKind::PD;
    if (name == "qpe") return AlgorithmKind::QPE;
    if (name == "qsa") return AlgorithmKind::QSa;
    if (name == "qsn") return AlgorithmKind::QSn;
    return std::nullopt;
}

void AlgorithmConfig::validate() const {
    auto forbid = [&](bool present, const char* field) {
        if (present)
            throw std::invalid_argument(algorithm() + " does not take parameter " + field);
    };
    auto need = [&](bool present, const char* field) {
        if (!present) throw std::invalid_argument(algorithm() + " needs parameter " + field);
    };
    if (state_qubits < 1) throw std::invalid_argument("state_qubits must be at least 1");
    switch (kind) {
        case AlgorithmKind::DTQW:
            need(steps.has_value(), "steps");
            if (*steps < 1) throw std::invalid_argument("steps must be at least 1");
            forbid(time || phase || marked_item || iterations || trotter_r, "other than steps");
            break;
        case AlgorithmKind::CTQW:
            need(time.has_value(), "time");
            forbid(steps || phase || marked_item || iterations || trotter_r, "other than time");
            break;
        case AlgorithmKind::PD:
            need(time.has_value(), "time");
            if (trotter_r && *trotter_r < 1)
                throw std::invalid_argument("trotter_r must be at least 1");
            forbid(steps || phase || marked_item || iterations, "other than time/trotter_r");
            break;
        case AlgorithmKind::QPE:
            need(phase.has_value(), "phase");
            if (*phase < 0.0 || *phase >= 1.0)
                throw std::invalid_argument("phase fraction must lie in [0,1)");
            forbid(steps || time || marked_item || iterations || trotter_r, "other than phase");
            break;
        case AlgorithmKind::QSa:
        case AlgorithmKind::QSn:
            need(marked_item.has_value(), "marked_item");
            need(iterations.has_value(), "iterations");
            if (*marked_item >= (std::uint64_t{1} << state_qubits))
                throw std::invalid_argument("marked_item outside search space");
            if (*iterations < 0) throw std::invalid_argument("iterations must be nonnegative");
            forbid(steps || time || phase || trotter_r, "other than marked_item/iterations");
            break;
    }
}

Circuit build_dtqw(int position_qubits, int steps) {
    if (position_qubits < 1) throw std::invalid_argument("position register needs a qubit");
    if (steps < 1) throw std::invalid_argument("at least one coin flip");
    const int k = position_qubits;
    const int coin = k;
    Circuit c(k + 1, k, "dtqw");

    auto controlled_shift_gate = [&](int j) {
        // controls: coin plus position bits below j, target p_j
        std::vector<int> ops{coin};
        for (int low = 0; low < j; ++low) ops.push_back(low);
        ops.push_back(j);
        if (ops.size() == 3) c.ccx(ops[0], ops[1], ops[2]);
        else c.mcx(ops);
    };

    for (int step = 0; step < steps; ++step) {
        c.h(coin);
        // coin |0>: decrement (inverse ripple), via an X sandwich
        c.x(coin);
        c.cx(coin, 0);
        for (int j = 1; j < k; ++j) controlled_shift_gate(j);
        c.x(coin);
        // coin |1>: increment ripple from the top bit down
        for (int j = k - 1; j >= 1; --j) controlled_shift_gate(j);
        c.cx(coin, 0);
    }
    for (int j = 0; j < k; ++j) c.measure(j, j);
    return c;
}

Circuit build_ctqw_exact(int position_qubits, double t) {
    if (position_qubits < 1) throw std::invalid_argument("position register needs a qubit");
    const int k = position_qubits;
    Circuit c(k, k, "ctqw");
    const CMatrix u = exact_evolution(cycle_walk_hamiltonian(1 << k), t);
    std::vector<int> qs(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) qs[static_cast<std::size_t>(j)] = j;
    c.unitary(u, qs);
    for (int j = 0; j < k; ++j) c.measure(j, j);
    return c;
}

Circuit build_pd(int position_qubits, double t, int r) {
    if (position_qubits < 1) throw std::invalid_argument("position register needs a qubit");
    const int k = position_qubits;
    const PauliDecomposition terms = pauli_decompose(cycle_walk_hamiltonian(1 << k));
    const Circuit evolution = trotter_circuit(terms, t, r);

    Circuit c(k, k, "pd");
    for (const auto& g : evolution.gates()) c.add(g);
    for (int j = 0; j < k; ++j) c.measure(j, j);
    return c;
}

namespace {

Circuit qft_circuit(int m) {
    Circuit c(m, 0);
    for (int j = m - 1; j >= 0; --j) {
        c.h(j);
        for (int i = j - 1; i >= 0; --i)
            c.cphase(M_PI / static_cast<double>(1 << (j - i)), i, j);
    }
    for (int i = 0; i < m / 2; ++i) c.swap(i, m - 1 - i);
    return c;
}

}  // namespace

Circuit build_qpe(int counting_qubits, double theta) {
    if (counting_qubits < 1) throw std::invalid_argument("counting register needs a qubit");
    const int m = counting_qubits;
    const int eigen = m;
    Circuit c(m + 1, m, "qpe");

    c.x(eigen);
    for (int j = 0; j < m; ++j) c.h(j);
    for (int j = 0; j < m; ++j)
        c.cphase(2.0 * M_PI * theta * static_cast<double>(std::uint64_t{1} << j), j, eigen);
    const Circuit iqft = inverse_circuit(qft_circuit(m));
    for (const auto& g : iqft.gates()) c.add(g);
    for (int j = 0; j < m; ++j) c.measure(j, j);
    return c;
}

namespace {

// Phase flip of |1...1> over qs, lowered to {CZ, H+MCX}.
void emit_mcz_plain(Circuit& c, const std::vector<int>& qs) {
    if (qs.size() == 1) {
        c.z(qs[0]);
    } else if (qs.size() == 2) {
        c.cz(qs[0], qs[1]);
    } else {
        const int target = qs.back();
        c.h(target);
        std::vector<int> ops = qs;
        if (ops.size() == 3) c.ccx(ops[0], ops[1], ops[2]);
        else c.mcx(ops);
        c.h(target);
    }
}

// Same phase flip, but the conjunction of the first two qubits is computed
// into a clean work qubit first, shrinking the multi-control by one.
void emit_mcz_ancilla(Circuit& c, const std::vector<int>& qs, int work) {
    if (qs.size() <= 2) {
        emit_mcz_plain(c, qs);
        return;
    }
    c.ccx(qs[0], qs[1], work);
    std::vector<int> rest{work};
    rest.insert(rest.end(), qs.begin() + 2, qs.end());
    emit_mcz_plain(c, rest);
    c.ccx(qs[0], qs[1], work);
}

}  // namespace

Circuit build_grover(int n, std::uint64_t marked, int iterations, bool use_ancilla) {
    if (n < 1) throw std::invalid_argument("search register needs a qubit");
    if (marked >= (std::uint64_t{1} << n)) throw std::invalid_argument("marked item out of range");
    if (iterations < 0) throw std::invalid_argument("iterations must be nonnegative");

    const int oracle_work = n;
    const int diffusion_work = n + 1;
    Circuit c(use_ancilla ? n + 2 : n, n, use_ancilla ? "qsa" : "qsn");

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;

    for (int q = 0; q < n; ++q) c.h(q);
    for (int it = 0; it < iterations; ++it) {
        // oracle: phase flip on |marked>
        for (int q = 0; q < n; ++q)
            if (!(marked & (std::uint64_t{1} << q))) c.x(q);
        if (use_ancilla) emit_mcz_ancilla(c, all, oracle_work);
        else emit_mcz_plain(c, all);
        for (int q = 0; q < n; ++q)
            if (!(marked & (std::uint64_t{1} << q))) c.x(q);
        // diffusion: reflection about the uniform superposition
        for (int q = 0; q < n; ++q) c.h(q);
        for (int q = 0; q < n; ++q) c.x(q);
        if (use_ancilla) emit_mcz_ancilla(c, all, diffusion_work);
        else emit_mcz_plain(c, all);
        for (int q = 0; q < n; ++q) c.x(q);
        for (int q = 0; q < n; ++q) c.h(q);
    }
    for (int q = 0; q < n; ++q) c.measure(q, q);
    return c;
}

Circuit build_circuit(const AlgorithmConfig& config) {
    config.validate();
    switch (config.kind) {
        case AlgorithmKind::DTQW:
            return build_dtqw(config.state_qubits, *config.steps);
        case AlgorithmKind::CTQW:
            return build_ctqw_exact(config.state_qubits, *config.time);
        case AlgorithmKind::PD: {
            int r = config.trotter_r.value_or(0);
            if (r < 1) {
                const auto terms =
                    pauli_decompose(cycle_walk_hamiltonian(1 << config.state_qubits));
                r = trotter_reps(terms, *config.time, 0.1);
            }
            return build_pd(config.state_qubits, *config.time, r);
        }
        case AlgorithmKind::QPE:
            return build_qpe(config.state_qubits, *config.phase);
        case AlgorithmKind::QSa:
            return build_grover(config.state_qubits, *config.marked_item, *config.iterations, true);
        case AlgorithmKind::QSn:
            return build_grover(config.state_qubits, *config.marked_item, *config.iterations, false);
    }
    throw std::logic_error("unreachable");
}

std::vector<double> ctqw_position_distribution(int position_qubits, double t) {
    const int n_nodes = 1 << position_qubits;
    std::vector<double> probs(static_cast<std::size_t>(n_nodes));
    for (int j = 0; j < n_nodes; ++j) {
        cxd amp{0.0, 0.0};
        for (int k = 0; k < n_nodes; ++k) {
            const double lambda = std::cos(2.0 * M_PI * k / n_nodes);
            const double arg = 2.0 * M_PI * k * j / n_nodes - lambda * t;
            amp += cxd{std::cos(arg), std::sin(arg)};
        }
        amp /= static_cast<double>(n_nodes);
        probs[static_cast<std::size_t>(j)] = std::norm(amp);
    }
    return probs;
}

std::vector<std::pair<std::uint64_t, double>> theoretical_success(const AlgorithmConfig& config) {
    config.validate();
    switch (config.kind) {
        case AlgorithmKind::DTQW: {
            if (*config.steps != 1)
                throw std::invalid_argument("closed form available for a single coin flip only");
            const std::uint64_t up = 1;
            const std::uint64_t down = (std::uint64_t{1} << config.state_qubits) - 1;
            if (up == down) return {{up, 1.0}};
            return {{up, 0.5}, {down, 0.5}};
        }
        case AlgorithmKind::CTQW:
        case AlgorithmKind::PD: {
            const auto probs = ctqw_position_distribution(config.state_qubits, *config.time);
            std::size_t best = 0;
            for (std::size_t j = 1; j < probs.size(); ++j)
                if (probs[j] > probs[best]) best = j;
            return {{best, probs[best]}};
        }
        case AlgorithmKind::QPE: {
            const int m = config.state_qubits;
            const double scaled = *config.phase * static_cast<double>(std::uint64_t{1} << m);
            const std::uint64_t nearest =
                static_cast<std::uint64_t>(std::llround(scaled)) % (std::uint64_t{1} << m);
            const double delta = *config.phase -
                                 static_cast<double>(nearest) /
                                     static_cast<double>(std::uint64_t{1} << m);
            double p = 1.0;
            if (std::abs(delta) > 1e-15) {
                const double num = std::sin(M_PI * delta * static_cast<double>(std::uint64_t{1} << m));
                const double den = std::sin(M_PI * delta);
                p = (num * num) / (den * den) / std::pow(4.0, m);
            }
            return {{nearest, p}};
        }
        case AlgorithmKind::QSa:
        case AlgorithmKind::QSn: {
            const double theta = std::asin(std::pow(2.0, -config.state_qubits / 2.0));
            const double amp = std::sin((2.0 * *config.iterations + 1.0) * theta);
            return {{*config.marked_item, amp * amp}};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace qbench
