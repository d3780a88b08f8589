#include "qbench/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace qbench {

double OutcomeDistribution::total() const {
    double s = 0.0;
    for (const auto& [label, p] : probs) s += p;
    return s;
}

double OutcomeDistribution::prob(const std::string& label) const {
    auto it = probs.find(label);
    return it == probs.end() ? 0.0 : it->second;
}

double OutcomeDistribution::prob_of_value(std::uint64_t value) const {
    return prob(label_of_value(value, num_clbits));
}

void OutcomeDistribution::validate(double tol) const {
    for (const auto& [label, p] : probs) {
        if (static_cast<int>(label.size()) != num_clbits)
            throw std::invalid_argument("outcome label '" + label + "' has wrong width");
        for (char c : label)
            if (c != '0' && c != '1')
                throw std::invalid_argument("outcome label '" + label + "' is not binary");
        if (p < 0.0) throw std::invalid_argument("negative probability for '" + label + "'");
    }
    if (std::abs(total() - 1.0) > tol)
        throw std::invalid_argument("distribution does not sum to 1");
}

std::string label_of_value(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int k = 0; k < width; ++k)
        if (value & (std::uint64_t{1} << k)) s[static_cast<std::size_t>(width - 1 - k)] = '1';
    return s;
}

std::uint64_t value_of_label(const std::string& label) {
    std::uint64_t v = 0;
    for (char c : label) {
        if (c != '0' && c != '1') throw std::invalid_argument("label is not binary: " + label);
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

Counts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
    dist.validate(1e-6);

    std::vector<std::string> labels;
    std::vector<double> cumulative;
    labels.reserve(dist.probs.size());
    double acc = 0.0;
    for (const auto& [label, p] : dist.probs) {
        acc += p;
        labels.push_back(label);
        cumulative.push_back(acc);
    }
    if (!cumulative.empty()) cumulative.back() = std::max(cumulative.back(), 1.0);

    std::mt19937_64 rng(seed);
    Counts out;
    out.shots = shots;
    for (std::uint64_t i = 0; i < shots; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::min(static_cast<std::size_t>(it - cumulative.begin()),
                                   labels.size() - 1);
        ++out.counts[labels[idx]];
    }
    return out;
}

}  // namespace qbench
