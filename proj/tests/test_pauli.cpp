#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qbench/hamiltonian.hpp"
#include "qbench/pauli.hpp"

using namespace qbench;

TEST_CASE("identity and single-letter decompositions") {
    {
        HermitianOperator h{CMatrix::identity(4), 2};
        const PauliDecomposition d = pauli_decompose(h);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].string == "II");
        CHECK(d.terms[0].coefficient == doctest::Approx(1.0));
    }
    {
        CMatrix z(2);
        z(0, 0) = 1;
        z(1, 1) = -1;
        const PauliDecomposition d = pauli_decompose({z, 1});
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].string == "Z");
        CHECK(d.terms[0].coefficient == doctest::Approx(1.0));
    }
}

TEST_CASE("four-cycle walk Hamiltonian decomposes to IX and XX at one half") {
    const PauliDecomposition d = pauli_decompose(cycle_walk_hamiltonian(4));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].string == "IX");
    CHECK(d.terms[0].coefficient == doctest::Approx(0.5));
    CHECK(d.terms[1].string == "XX");
    CHECK(d.terms[1].coefficient == doctest::Approx(0.5));
    // brute-force trace formula over all 16 strings
    const char* letters = "IXYZ";
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const std::string s{letters[a], letters[b]};
            const CMatrix product =
                matmul(pauli_string_matrix(s), cycle_walk_hamiltonian(4).matrix);
            cxd tr{0, 0};
            for (std::size_t i = 0; i < 4; ++i) tr += product(i, i);
            const double expected = (s == "IX" || s == "XX") ? 0.5 : 0.0;
            CHECK(std::abs(tr / 4.0 - cxd{expected, 0.0}) < 1e-12);
        }
}

TEST_CASE("decompose then reconstruct is the identity on random Hermitians") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const HermitianOperator h = oracle::random_hermitian(n, rng);
        const PauliDecomposition d = pauli_decompose(h);
        CHECK(max_abs_diff(d.reconstruct(), h.matrix) < 1e-10);
        // coefficients are real and strings distinct by construction
        for (std::size_t i = 1; i < d.terms.size(); ++i)
            CHECK(d.terms[i - 1].string < d.terms[i].string);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    CMatrix bad(2);
    bad(0, 1) = cxd{1, 1};
    CHECK_THROWS_AS(pauli_decompose({bad, 1}), std::invalid_argument);
}

TEST_CASE("string commutation matches the matrix commutator") {
    std::mt19937 rng(62);
    const char* letters = "IXYZ";
    for (int trial = 0; trial < 50; ++trial) {
        std::string a, b;
        for (int k = 0; k < 2; ++k) {
            a += letters[rng() % 4];
            b += letters[rng() % 4];
        }
        const CMatrix ma = pauli_string_matrix(a), mb = pauli_string_matrix(b);
        const CMatrix ab = matmul(ma, mb), ba = matmul(mb, ma);
        const bool matrices_commute = max_abs_diff(ab, ba) < 1e-12;
        CHECK(pauli_strings_commute(a, b) == matrices_commute);
    }
}
