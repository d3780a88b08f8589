#include "qbench/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace qbench {

namespace {

const char LETTERS[4] = {'I', 'X', 'Y', 'Z'};

CMatrix pauli_1q(char p) {
    CMatrix m(2);
    switch (p) {
        case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
        case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
        case 'Y': m(0, 1) = cxd{0, -1}; m(1, 0) = cxd{0, 1}; break;
        case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
        default: throw std::invalid_argument(std::string("bad pauli letter '") + p + "'");
    }
    return m;
}

std::string string_of_index(std::size_t idx, int n) {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int c = n - 1; c >= 0; --c) {
        s[static_cast<std::size_t>(c)] = LETTERS[idx & 3];
        idx >>= 2;
    }
    return s;
}

}  // namespace

void HermitianOperator::validate(double tol) const {
    if (matrix.dim != (std::size_t{1} << num_qubits))
        throw std::invalid_argument("operator dimension is not 2^num_qubits");
    if (!is_hermitian(matrix, tol))
        throw std::invalid_argument("operator is not Hermitian");
}

CMatrix pauli_string_matrix(const std::string& s) {
    CMatrix m = pauli_1q(s.empty() ? 'I' : s[0]);
    for (std::size_t c = 1; c < s.size(); ++c) m = kron(m, pauli_1q(s[c]));
    return m;
}

bool pauli_strings_commute(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pauli strings differ in length");
    int anticommuting = 0;
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] != 'I' && b[c] != 'I' && a[c] != b[c]) ++anticommuting;
    return anticommuting % 2 == 0;
}

bool all_terms_commute(const PauliDecomposition& d) {
    for (std::size_t i = 0; i < d.terms.size(); ++i)
        for (std::size_t j = i + 1; j < d.terms.size(); ++j)
            if (!pauli_strings_commute(d.terms[i].string, d.terms[j].string)) return false;
    return true;
}

CMatrix PauliDecomposition::reconstruct() const {
    CMatrix sum(std::size_t{1} << num_qubits);
    for (const auto& term : terms)
        sum = add(sum, scale(pauli_string_matrix(term.string), term.coefficient));
    return sum;
}

PauliDecomposition pauli_decompose(const HermitianOperator& h) {
    h.validate();
    const int n = h.num_qubits;
    const std::size_t dim = std::size_t{1} << n;

    PauliDecomposition out;
    out.num_qubits = n;
    for (std::size_t sidx = 0; sidx < (std::size_t{1} << (2 * n)); ++sidx) {
        const std::string s = string_of_index(sidx, n);

        // sigma_s columns hold one entry each: column i maps to row i^xmask
        // with a phase from the Y and Z letters, so the trace against H is a
        // single sweep.
        std::size_t xmask = 0;
        for (int c = 0; c < n; ++c) {
            const char letter = s[static_cast<std::size_t>(c)];
            if (letter == 'X' || letter == 'Y') xmask |= std::size_t{1} << (n - 1 - c);
        }
        cxd trace{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) {
            const std::size_t src = i ^ xmask;
            cxd phase{1.0, 0.0};
            for (int c = 0; c < n; ++c) {
                const char letter = s[static_cast<std::size_t>(c)];
                const bool bit = (src >> (n - 1 - c)) & 1;
                if (letter == 'Y') phase *= bit ? cxd{0, -1} : cxd{0, 1};
                else if (letter == 'Z' && bit) phase = -phase;
            }
            trace += phase * h.matrix(src, i);
        }
        const double alpha = (trace / static_cast<double>(dim)).real();
        if (std::abs(alpha) >= 1e-12) out.terms.push_back({s, alpha});
    }
    return out;
}

}  // namespace qbench
