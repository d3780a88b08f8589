#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace qbench {

/// Normalized map from measured bitstring labels to probabilities. Labels
/// are fixed-width binary strings, most significant classical bit first, so
/// the decimal value of a label reads classical bit 0 as the least
/// significant bit.
struct OutcomeDistribution {
    std::map<std::string, double> probs;
    int num_clbits = 0;

    double total() const;
    double prob(const std::string& label) const;
    double prob_of_value(std::uint64_t value) const;

    /// Throws std::invalid_argument if labels have the wrong width, any
    /// probability is negative, or the total strays from 1 by more than tol.
    void validate(double tol = 1e-9) const;
};

/// Integer-valued precursor of a distribution plus file metadata.
struct Counts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::string machine;
    std::string timestamp;
};

std::string label_of_value(std::uint64_t value, int width);
std::uint64_t value_of_label(const std::string& label);

/// Multinomial draw of `shots` samples, reproducible given `seed`.
/// RNG is std::mt19937_64 with uniforms taken as (x >> 11) * 2^-53, so the
/// stream depends only on the standardized engine, not on library details.
/// Reproducibility is promised within this implementation; ports replicate
/// counts at the distribution level only.
Counts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace qbench
