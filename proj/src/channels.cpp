#include "qbench/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qbench {

namespace {

CMatrix pauli_1q(char p) {
    CMatrix m(2);
    switch (p) {
        case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
        case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
        case 'Y': m(0, 1) = cxd{0, -1}; m(1, 0) = cxd{0, 1}; break;
        case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
        default: throw std::invalid_argument("bad pauli letter");
    }
    return m;
}

}  // namespace

bool KrausChannel::is_identity() const {
    if (operators.size() != 1) return false;
    return operators.front() == CMatrix::identity(operators.front().dim);
}

void KrausChannel::validate(double tol) const {
    if (operators.empty()) throw std::invalid_argument("channel has no operators");
    CMatrix sum(dim());
    for (const auto& k : operators) {
        if (k.dim != dim()) throw std::invalid_argument("channel operators differ in dimension");
        sum = add(sum, matmul(dagger(k), k));
    }
    if (max_abs_diff(sum, CMatrix::identity(dim())) > tol)
        throw std::invalid_argument("channel '" + label + "' is not trace preserving");
}

KrausChannel depolarizing(double p, int arity) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing probability outside [0,1]");
    if (arity != 1 && arity != 2) throw std::invalid_argument("depolarizing arity must be 1 or 2");

    KrausChannel ch;
    ch.label = "depolarizing(p=" + std::to_string(p) + ", arity=" + std::to_string(arity) + ")";
    const std::size_t dim = std::size_t{1} << arity;
    if (p == 0.0) {
        ch.operators.push_back(CMatrix::identity(dim));
        return ch;
    }

    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    if (arity == 1) {
        ch.operators.push_back(scale(CMatrix::identity(2), std::sqrt(1.0 - p)));
        for (int i = 1; i < 4; ++i)
            ch.operators.push_back(scale(pauli_1q(letters[i]), std::sqrt(p / 3.0)));
    } else {
        ch.operators.push_back(scale(CMatrix::identity(4), std::sqrt(1.0 - p)));
        for (int hi = 0; hi < 4; ++hi)
            for (int lo = 0; lo < 4; ++lo) {
                if (hi == 0 && lo == 0) continue;
                ch.operators.push_back(
                    scale(kron(pauli_1q(letters[hi]), pauli_1q(letters[lo])), std::sqrt(p / 15.0)));
            }
    }
    ch.validate();
    return ch;
}

KrausChannel thermal_relaxation(double t1, double t2, double duration) {
    if (t1 <= 0.0 || t2 <= 0.0) throw std::invalid_argument("relaxation times must be positive");
    if (t2 > 2.0 * t1 + 1e-12) throw std::invalid_argument("t2 exceeds 2*t1");
    if (duration < 0.0) throw std::invalid_argument("negative duration");

    KrausChannel ch;
    ch.label = "thermal_relaxation";
    if (duration == 0.0) {
        ch.operators.push_back(CMatrix::identity(2));
        return ch;
    }

    const double gamma_ad = 1.0 - std::exp(-duration / t1);
    // 1/T_phi = 1/T2 - 1/(2 T1); clamp guards the T2 == 2*T1 boundary.
    const double rate_phi = std::max(0.0, 1.0 / t2 - 0.5 / t1);
    const double lambda = 1.0 - std::exp(-duration * rate_phi);

    // Amplitude damping.
    CMatrix a0(2), a1(2);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - gamma_ad);
    a1(0, 1) = std::sqrt(gamma_ad);
    // Pure dephasing as a probabilistic Z so the off-diagonal shrinks by
    // exactly exp(-duration/T_phi).
    CMatrix d0 = scale(CMatrix::identity(2), std::sqrt(1.0 - lambda / 2.0));
    CMatrix d1 = scale(pauli_1q('Z'), std::sqrt(lambda / 2.0));

    for (const auto& d : {d0, d1})
        for (const auto& a : {a0, a1}) ch.operators.push_back(matmul(d, a));
    ch.validate();
    return ch;
}

KrausChannel bit_flip(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("flip probability outside [0,1]");
    KrausChannel ch;
    ch.label = "bit_flip(p=" + std::to_string(p) + ")";
    if (p == 0.0) {
        ch.operators.push_back(CMatrix::identity(2));
        return ch;
    }
    ch.operators.push_back(scale(CMatrix::identity(2), std::sqrt(1.0 - p)));
    ch.operators.push_back(scale(pauli_1q('X'), std::sqrt(p)));
    ch.validate();
    return ch;
}

}  // namespace qbench
