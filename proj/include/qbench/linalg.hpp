#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qbench {

using cxd = std::complex<double>;

/// Dense square complex matrix, row-major. Small by construction: gate
/// matrices, channel operators and Hamiltonians up to a handful of qubits.
struct CMatrix {
    std::size_t dim = 0;
    std::vector<cxd> a;

    CMatrix() = default;
    explicit CMatrix(std::size_t d) : dim(d), a(d * d, cxd{0.0, 0.0}) {}

    static CMatrix identity(std::size_t d) {
        CMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    cxd& operator()(std::size_t i, std::size_t j) { return a[i * dim + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return a[i * dim + j]; }

    bool operator==(const CMatrix&) const = default;
};

CMatrix matmul(const CMatrix& x, const CMatrix& y);
CMatrix kron(const CMatrix& x, const CMatrix& y);
CMatrix dagger(const CMatrix& x);
CMatrix add(const CMatrix& x, const CMatrix& y);
CMatrix scale(const CMatrix& x, cxd s);

std::vector<cxd> matvec(const CMatrix& m, const std::vector<cxd>& v);

/// Largest entrywise |x - y|.
double max_abs_diff(const CMatrix& x, const CMatrix& y);

bool is_hermitian(const CMatrix& m, double tol);
bool is_unitary(const CMatrix& m, double tol);

/// Entrywise distance minimized over a global phase, for comparing circuit
/// unitaries that are only defined up to phase.
double phase_aligned_diff(const CMatrix& x, const CMatrix& y);

}  // namespace qbench
