#include "qbench/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qbench {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) e(static_cast<Eigen::Index>(i),
                                                  static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

}  // namespace

HermitianOperator cycle_walk_hamiltonian(int num_nodes) {
    if (!is_power_of_two(num_nodes) || num_nodes < 2)
        throw std::invalid_argument("cycle size must be a power of two, at least 2");
    int n = 0;
    while ((1 << n) < num_nodes) ++n;

    HermitianOperator h;
    h.num_qubits = n;
    h.matrix = CMatrix(static_cast<std::size_t>(num_nodes));
    for (int i = 0; i < num_nodes; ++i) {
        const int next = (i + 1) % num_nodes;
        const int prev = (i + num_nodes - 1) % num_nodes;
        h.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(next)) = 0.5;
        h.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(prev)) = 0.5;
    }
    return h;
}

double spectral_norm(const HermitianOperator& h) {
    h.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h.matrix),
                                                           Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

int trotter_reps(const PauliDecomposition& terms, double t, double eps) {
    if (t <= 0.0 || eps <= 0.0) throw std::invalid_argument("t and eps must be positive");
    if (terms.terms.size() <= 1 || all_terms_commute(terms)) return 1;

    HermitianOperator h{terms.reconstruct(), terms.num_qubits};
    const double x = std::pow(spectral_norm(h) * t, 2) / eps;
    // shave a relative epsilon so eigensolver rounding cannot push an exact
    // integer bound over the fence
    return std::max(1, static_cast<int>(std::ceil(x * (1.0 - 1e-12))));
}

Circuit exp_pauli_circuit(const PauliTerm& term, double theta, int num_qubits) {
    const int n = num_qubits > 0 ? num_qubits : static_cast<int>(term.string.size());
    if (static_cast<int>(term.string.size()) != n)
        throw std::invalid_argument("pauli string length does not match register");
    Circuit c(n, 0);

    std::vector<int> active;
    for (int col = 0; col < n; ++col) {
        const char letter = term.string[static_cast<std::size_t>(col)];
        if (letter != 'I') active.push_back(n - 1 - col);
    }
    if (active.empty()) return c;  // global phase only
    std::sort(active.begin(), active.end());

    auto letter_of = [&](int qubit) { return term.string[static_cast<std::size_t>(n - 1 - qubit)]; };
    for (int q : active) {
        if (letter_of(q) == 'X') c.h(q);
        else if (letter_of(q) == 'Y') { c.sdg(q); c.h(q); }
    }
    for (std::size_t j = 0; j + 1 < active.size(); ++j) c.cx(active[j], active[j + 1]);
    c.rz(2.0 * theta, active.back());
    for (std::size_t j = active.size() - 1; j-- > 0;) c.cx(active[j], active[j + 1]);
    for (int q : active) {
        if (letter_of(q) == 'X') c.h(q);
        else if (letter_of(q) == 'Y') { c.h(q); c.s(q); }
    }
    return c;
}

Circuit trotter_circuit(const PauliDecomposition& terms, double t, int r) {
    if (r < 1) throw std::invalid_argument("repetition count must be at least 1");
    std::vector<PauliTerm> ordered = terms.terms;
    std::sort(ordered.begin(), ordered.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });

    Circuit c(terms.num_qubits, 0);
    for (int rep = 0; rep < r; ++rep)
        for (const auto& term : ordered) {
            const Circuit piece =
                exp_pauli_circuit(term, term.coefficient * t / static_cast<double>(r),
                                  terms.num_qubits);
            for (const auto& g : piece.gates()) c.add(g);
        }
    return c;
}

CMatrix exact_evolution(const HermitianOperator& h, double t) {
    h.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h.matrix));
    const Eigen::MatrixXcd& vecs = solver.eigenvectors();
    Eigen::VectorXcd phases(solver.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases(k) = std::exp(cxd{0.0, -solver.eigenvalues()(k) * t});
    const Eigen::MatrixXcd u = vecs * phases.asDiagonal() * vecs.adjoint();

    CMatrix out(h.matrix.dim);
    for (std::size_t i = 0; i < out.dim; ++i)
        for (std::size_t j = 0; j < out.dim; ++j)
            out(i, j) = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

}  // namespace qbench
