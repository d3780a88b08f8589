#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qbench/gates.hpp"

using namespace qbench;

TEST_CASE("every unitary gate kind satisfies U Udag = I") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
    const std::vector<GateKind> fixed = {GateKind::X,  GateKind::Y,   GateKind::Z,  GateKind::H,
                                         GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg,
                                         GateKind::CX, GateKind::CZ,  GateKind::Swap, GateKind::CCX};
    for (GateKind k : fixed) {
        std::vector<int> qs(static_cast<std::size_t>(kind_fixed_arity(k)));
        for (int i = 0; i < kind_fixed_arity(k); ++i) qs[static_cast<std::size_t>(i)] = i;
        CAPTURE(kind_name(k));
        CHECK(is_unitary(gate_matrix(make_gate(k, qs)), 1e-12));
    }
    const std::vector<GateKind> param = {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::Phase,
                                         GateKind::CPhase};
    for (int trial = 0; trial < 25; ++trial)
        for (GateKind k : param) {
            std::vector<int> qs(static_cast<std::size_t>(kind_fixed_arity(k)));
            for (int i = 0; i < kind_fixed_arity(k); ++i) qs[static_cast<std::size_t>(i)] = i;
            CHECK(is_unitary(gate_matrix(make_rotation(k, angle(rng), qs)), 1e-12));
        }
}

TEST_CASE("gate matrices agree with the dense reference definitions") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = oracle::random_circuit(3, 12, rng);
        for (const auto& g : c.gates()) {
            if (g.kind == GateKind::Measure) continue;
            CHECK(max_abs_diff(gate_matrix(g), oracle::dense_gate_matrix(g)) < 1e-15);
        }
    }
    (void)angle;
}

TEST_CASE("kron and matmul compose as expected") {
    CMatrix x = oracle::m2(0, 1, 1, 0);
    CMatrix z = oracle::m2(1, 0, 0, -1);
    CMatrix xz = kron(x, z);
    CHECK(xz.dim == 4);
    CHECK(xz(0, 2) == cxd{1, 0});
    CHECK(xz(1, 3) == cxd{-1, 0});
    // (X kron Z)^2 = I
    CHECK(max_abs_diff(matmul(xz, xz), CMatrix::identity(4)) < 1e-15);
}

TEST_CASE("phase aligned distance ignores a global phase") {
    CMatrix h = oracle::m2(std::sqrt(0.5), std::sqrt(0.5), std::sqrt(0.5), -std::sqrt(0.5));
    CMatrix rotated = scale(h, std::polar(1.0, 1.234));
    CHECK(max_abs_diff(h, rotated) > 0.5);
    CHECK(phase_aligned_diff(h, rotated) < 1e-12);
}
