#include "qbench/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qbench {

CMatrix matmul(const CMatrix& x, const CMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matmul: dimension mismatch");
    CMatrix r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k) {
            const cxd xik = x(i, k);
            if (xik == cxd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < x.dim; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
    CMatrix r(x.dim * y.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j) {
            const cxd xij = x(i, j);
            if (xij == cxd{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < y.dim; ++k)
                for (std::size_t l = 0; l < y.dim; ++l)
                    r(i * y.dim + k, j * y.dim + l) = xij * y(k, l);
        }
    return r;
}

CMatrix dagger(const CMatrix& x) {
    CMatrix r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j) r(j, i) = std::conj(x(i, j));
    return r;
}

CMatrix add(const CMatrix& x, const CMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("add: dimension mismatch");
    CMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

CMatrix scale(const CMatrix& x, cxd s) {
    CMatrix r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

std::vector<cxd> matvec(const CMatrix& m, const std::vector<cxd>& v) {
    if (m.dim != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cxd> r(m.dim, cxd{0.0, 0.0});
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) r[i] += m(i, j) * v[j];
    return r;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

bool is_hermitian(const CMatrix& m, double tol) {
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = i; j < m.dim; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const CMatrix& m, double tol) {
    return max_abs_diff(matmul(m, dagger(m)), CMatrix::identity(m.dim)) <= tol;
}

double phase_aligned_diff(const CMatrix& x, const CMatrix& y) {
    // Align on the phase maximizing Re(e^{-i phi} tr(y^dag x)).
    cxd overlap{0.0, 0.0};
    for (std::size_t i = 0; i < x.a.size(); ++i) overlap += std::conj(y.a[i]) * x.a[i];
    cxd phase = std::abs(overlap) > 1e-300 ? overlap / std::abs(overlap) : cxd{1.0, 0.0};
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        d = std::max(d, std::abs(x.a[i] - phase * y.a[i]));
    return d;
}

}  // namespace qbench
