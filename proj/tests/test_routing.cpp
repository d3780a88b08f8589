#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qbench/metrics.hpp"
#include "qbench/routing.hpp"
#include "qbench/statevector.hpp"

using namespace qbench;

namespace {

ArchitectureSpec line(int n) {
    ArchitectureSpec arch = fully_connected(n);
    arch.edges.clear();
    for (int q = 0; q + 1 < n; ++q) arch.edges.insert({q, q + 1});
    arch.name = "line-" + std::to_string(n);
    arch.validate();
    return arch;
}

// connected random graph: a random spanning tree plus a few extra edges
ArchitectureSpec random_connected(int n, std::mt19937& rng) {
    ArchitectureSpec arch = fully_connected(n);
    arch.edges.clear();
    for (int q = 1; q < n; ++q) arch.edges.insert(make_edge(q, static_cast<int>(rng() % q)));
    for (int extra = 0; extra < n / 2; ++extra) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) arch.edges.insert(make_edge(a, b));
    }
    arch.name = "random-" + std::to_string(n);
    arch.validate();
    return arch;
}

}  // namespace

TEST_CASE("adjacent gates pass through untouched") {
    Circuit c(2, 2);
    c.cx(0, 1).measure(0, 0).measure(1, 1);
    const Circuit routed = route(c, line(5));
    REQUIRE(routed.gates().size() == 3);
    CHECK(routed.gates()[0].kind == GateKind::CX);
    CHECK(routed.gates()[0].operands == std::vector<int>{0, 1});
    CHECK(routed.num_qubits() == 5);
}

TEST_CASE("a distance-two interaction gets one swap and an updated mapping") {
    Circuit c(3, 0);
    c.cx(0, 2);
    const Circuit routed = route(c, line(3));
    REQUIRE(routed.gates().size() == 2);
    CHECK(routed.gates()[0].kind == GateKind::Swap);
    CHECK(routed.gates()[0].operands == std::vector<int>{0, 1});
    CHECK(routed.gates()[1].kind == GateKind::CX);
    CHECK(routed.gates()[1].operands == std::vector<int>{1, 2});
}

TEST_CASE("all-to-all coupling leaves the gate list unchanged") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        // compare in the two-qubit basis; lowering happens before routing
        const Circuit c = macro_expand(oracle::random_circuit(4, 20, rng));
        const Circuit routed = route(c, fully_connected(4));
        REQUIRE(routed.gates().size() == c.gates().size());
        for (std::size_t i = 0; i < c.gates().size(); ++i) {
            CHECK(routed.gates()[i].kind == c.gates()[i].kind);
            CHECK(routed.gates()[i].operands == c.gates()[i].operands);
        }
    }
}

TEST_CASE("routing preserves the measured distribution") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const int width = 2 + static_cast<int>(rng() % 3);  // 2..4 logical
        const Circuit c = oracle::random_circuit(width, 12, rng);
        const int phys = width + static_cast<int>(rng() % 3);
        const ArchitectureSpec arch = random_connected(phys, rng);

        std::vector<int> layout(static_cast<std::size_t>(phys));
        for (int q = 0; q < phys; ++q) layout[static_cast<std::size_t>(q)] = q;
        std::shuffle(layout.begin(), layout.end(), rng);
        layout.resize(static_cast<std::size_t>(width));

        const Circuit routed = route(c, arch, layout);
        for (const auto& g : routed.gates())
            if (g.operands.size() == 2) CHECK(arch.adjacent(g.operands[0], g.operands[1]));

        const double h = hellinger(measure_distribution(c), measure_distribution(routed));
        CHECK(h < 1e-9);
    }
}

TEST_CASE("layout validation") {
    Circuit c(2, 0);
    c.cx(0, 1);
    CHECK_THROWS_AS(route(c, line(3), {0, 0}), std::invalid_argument);  // not injective
    CHECK_THROWS_AS(route(c, line(3), {0, 7}), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(route(c, line(3), {0}), std::invalid_argument);     // wrong size
    Circuit wide(4, 0);
    CHECK_THROWS_AS(route(wide, line(3)), std::invalid_argument);  // circuit wider than machine
}

TEST_CASE("ccx lowers before routing so only coupled pairs remain") {
    Circuit c(3, 3);
    c.ccx(0, 1, 2);
    for (int q = 0; q < 3; ++q) c.measure(q, q);
    const ArchitectureSpec arch = line(3);
    const Circuit routed = route(c, arch);
    for (const auto& g : routed.gates()) {
        CHECK(g.operands.size() <= 2);
        if (g.operands.size() == 2) CHECK(arch.adjacent(g.operands[0], g.operands[1]));
    }
    CHECK(hellinger(measure_distribution(c), measure_distribution(routed)) < 1e-9);
}
