#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qbench/distribution.hpp"

using namespace qbench;

TEST_CASE("label conventions: classical bit 0 is the least significant") {
    CHECK(label_of_value(1, 2) == "01");
    CHECK(label_of_value(3, 2) == "11");
    CHECK(label_of_value(10, 4) == "1010");
    CHECK(value_of_label("01") == 1);
    CHECK(value_of_label("1010") == 10);
}

TEST_CASE("point distribution sampling is exact") {
    OutcomeDistribution d;
    d.num_clbits = 2;
    d.probs["01"] = 1.0;
    const Counts c = sample(d, 100, 7);
    CHECK(c.shots == 100);
    CHECK(c.counts.at("01") == 100);
    CHECK(c.counts.size() == 1);
}

TEST_CASE("fair coin counts concentrate within five sigma") {
    OutcomeDistribution d;
    d.num_clbits = 1;
    d.probs["0"] = 0.5;
    d.probs["1"] = 0.5;
    const std::uint64_t shots = 100000;
    const double sigma = std::sqrt(shots * 0.25);
    for (std::uint64_t seed : {1ULL, 42ULL, 987654321ULL}) {
        const Counts c = sample(d, shots, seed);
        CHECK(c.counts.at("0") + c.counts.at("1") == shots);
        CHECK(std::abs(static_cast<double>(c.counts.at("0")) - 50000.0) < 5.0 * sigma);
    }
}

TEST_CASE("identical seeds reproduce identical counts") {
    OutcomeDistribution d;
    d.num_clbits = 2;
    d.probs["00"] = 0.2;
    d.probs["01"] = 0.3;
    d.probs["11"] = 0.5;
    const Counts a = sample(d, 5000, 1234);
    const Counts b = sample(d, 5000, 1234);
    const Counts c = sample(d, 5000, 1235);
    CHECK(a.counts == b.counts);
    CHECK(a.counts != c.counts);
}

TEST_CASE("validation catches malformed distributions") {
    OutcomeDistribution d;
    d.num_clbits = 2;
    d.probs["01"] = 0.6;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // sums to 0.6
    d.probs["10"] = 0.4;
    CHECK_NOTHROW(d.validate());
    d.probs["2x"] = 0.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // non-binary label
    d.probs.erase("2x");
    d.probs["011"] = 0.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // wrong width
    CHECK_THROWS_AS(sample(d, 0, 1), std::invalid_argument);
}
