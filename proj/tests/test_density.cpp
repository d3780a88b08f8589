#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "oracle.hpp"
#include "qbench/density.hpp"
#include "qbench/metrics.hpp"
#include "qbench/statevector.hpp"

using namespace qbench;

namespace {

double smallest_eigenvalue(const DensityMatrix& dm) {
    Eigen::MatrixXcd m(dm.dim, dm.dim);
    for (std::size_t i = 0; i < dm.dim; ++i)
        for (std::size_t j = 0; j < dm.dim; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dm.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double hermitian_defect(const DensityMatrix& dm) {
    double worst = 0.0;
    for (std::size_t i = 0; i < dm.dim; ++i)
        for (std::size_t j = 0; j < dm.dim; ++j)
            worst = std::max(worst, std::abs(dm.at(i, j) - std::conj(dm.at(j, i))));
    return worst;
}

ArchitectureSpec noisy_fixture(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ArchitectureSpec arch =
        fully_connected(n, 0.001 + 0.02 * u(rng), 0.005 + 0.04 * u(rng), 0.01 * u(rng),
                        0.05 * u(rng), 40.0 + 100.0 * u(rng), 30.0 + 40.0 * u(rng));
    return arch;
}

}  // namespace

TEST_CASE("state stays a density matrix through gates and channels") {
    std::mt19937 rng(51);
    DensityMatrix dm = DensityMatrix::zero_state(2);
    const Circuit c = macro_expand(oracle::random_circuit(2, 12, rng));
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Measure) continue;
        dm.apply_unitary(gate_matrix(g), g.operands);
        dm.apply_channel(depolarizing(0.02, static_cast<int>(g.operands.size())), g.operands);
        for (int q : g.operands)
            dm.apply_channel(thermal_relaxation(60.0, 80.0, 0.2), {q});
        CHECK(dm.trace_real() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(hermitian_defect(dm) < 1e-10);
    }
    CHECK(smallest_eigenvalue(dm) > -1e-9);
}

TEST_CASE("noiseless parameters reproduce the ideal distribution") {
    std::mt19937 rng(52);
    const ArchitectureSpec arch = fully_connected(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = oracle::random_circuit(3, 15, rng);
        const OutcomeDistribution noisy = run_noisy(c, arch);
        const OutcomeDistribution ideal = measure_distribution(c);
        CHECK(hellinger(noisy, ideal) < 1e-9);
    }
}

TEST_CASE("pure readout error flips the measured bit") {
    ArchitectureSpec arch = fully_connected(1);
    arch.noise.meas_error[0] = 0.1;
    Circuit c(1, 1);
    c.x(0).measure(0, 0);
    const OutcomeDistribution dist = run_noisy(c, arch);
    CHECK(dist.prob("1") == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(dist.prob("0") == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("depolarizing on x leaves (1-p) + p/3 in the flipped state") {
    ArchitectureSpec arch = fully_connected(1);
    arch.noise.gate_error_1q[{"x", 0}] = 0.03;
    Circuit c(1, 1);
    c.x(0).measure(0, 0);
    const OutcomeDistribution dist = run_noisy(c, arch);
    CHECK(dist.prob("1") == doctest::Approx(0.98).epsilon(1e-12));
    CHECK(dist.prob("0") == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("preparation error flips before anything else") {
    ArchitectureSpec arch = fully_connected(1);
    arch.noise.prep_error[0] = 0.25;
    Circuit c(1, 1);
    c.measure(0, 0);
    const OutcomeDistribution dist = run_noisy(c, arch);
    CHECK(dist.prob("1") == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("noisy simulation matches the dense Kraus-product reference") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 2);
        const ArchitectureSpec arch = noisy_fixture(n, rng);
        const Circuit c = oracle::random_circuit(n, 8, rng);
        const OutcomeDistribution fast = run_noisy(c, arch);
        const OutcomeDistribution dense = oracle::noisy_distribution(c, arch);
        for (const auto& [label, p] : dense.probs)
            CHECK(fast.prob(label) == doctest::Approx(p).epsilon(1e-9));
        CHECK(hellinger(fast, dense) < 1e-9);
    }
}

TEST_CASE("distance to ideal grows with uniform depolarizing strength") {
    const Circuit dtqw = [] {
        Circuit c(3, 2);
        c.h(2);
        c.x(2);
        c.cx(2, 0);
        c.ccx(2, 0, 1);
        c.x(2);
        c.ccx(2, 0, 1);
        c.cx(2, 0);
        c.measure(0, 0).measure(1, 1);
        return c;
    }();
    const OutcomeDistribution ideal = measure_distribution(dtqw);
    double previous = -1.0;
    for (int step = 0; step <= 10; ++step) {
        const double p = 0.01 * step;
        const ArchitectureSpec arch = fully_connected(3, p, p);
        const double h = hellinger(run_noisy(dtqw, arch), ideal);
        CHECK(h >= previous - 1e-12);
        previous = h;
    }
    CHECK(previous > 0.05);  // the sweep actually degraded something
}

TEST_CASE("cap and contract violations") {
    const ArchitectureSpec arch = fully_connected(3);
    Circuit unmeasured(2, 0);
    unmeasured.h(0);
    CHECK_THROWS_AS(run_noisy(unmeasured, arch), std::invalid_argument);

    NoisySimOptions tight;
    tight.max_qubits = 2;
    Circuit wide(3, 3);
    wide.h(0).h(1).h(2);
    for (int q = 0; q < 3; ++q) wide.measure(q, q);
    CHECK_THROWS_AS(run_noisy(wide, arch, {}, tight), SimCapExceeded);

    ArchitectureSpec missing = fully_connected(2);
    missing.noise.gate_error_1q.clear();
    Circuit c(1, 1);
    c.x(0).measure(0, 0);
    CHECK_THROWS_WITH_AS(run_noisy(c, missing), doctest::Contains("missing noise parameter"),
                         std::invalid_argument);
}

TEST_CASE("untouched qubits do not widen the density matrix") {
    // 10-qubit machine, 2-qubit circuit, cap far below the machine size
    const ArchitectureSpec arch = fully_connected(10);
    NoisySimOptions opts;
    opts.max_qubits = 3;
    Circuit c(2, 2);
    c.h(0).cx(0, 1).measure(0, 0).measure(1, 1);
    const OutcomeDistribution dist = run_noisy(c, arch, {}, opts);
    CHECK(dist.prob("00") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(dist.prob("11") == doctest::Approx(0.5).epsilon(1e-9));
}
