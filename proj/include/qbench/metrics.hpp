#pragma once

#include <string>

#include "qbench/distribution.hpp"

namespace qbench {

/// Hellinger distance sqrt(sum (sqrt(p) - sqrt(q))^2 / 2) over the union of
/// both supports, absent entries as zero. Inputs must be normalized within
/// 1e-6.
double hellinger(const OutcomeDistribution& p, const OutcomeDistribution& q);

enum class Estimation { Overestimate, Underestimate, Exact };
enum class Confidence { High, Low };

std::string to_string(Estimation e);
std::string to_string(Confidence c);

struct ReportMeta {
    std::string machine;
    std::string algorithm;
    std::uint64_t shots = 0;
};

/// One benchmark row: the three pairwise distances between the device (q),
/// noisy-model (n) and ideal (i) distributions, plus the derived columns.
/// alpha = h(q, i), beta = h(q, n), gamma = h(n, i). alpha < gamma means
/// the calibrated parameters overestimate the device noise; confidence is
/// high when beta >= |alpha - gamma|.
struct BenchmarkReport {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double abs_gap = 0.0;
    Estimation estimation = Estimation::Exact;
    Confidence confidence = Confidence::High;
    std::string machine;
    std::string algorithm;
    std::uint64_t shots = 0;
};

/// Derived columns straight from the three distances (ties within 1e-12
/// report Exact).
BenchmarkReport report_from_distances(double alpha, double beta, double gamma,
                                      const ReportMeta& meta = {});

BenchmarkReport compute_benchmarks(const OutcomeDistribution& device,
                                   const OutcomeDistribution& noisy,
                                   const OutcomeDistribution& ideal, const ReportMeta& meta = {});

OutcomeDistribution counts_to_distribution(const Counts& c);

/// Delimited row: machine, alpha, beta, gamma, |alpha-gamma|, estimation,
/// confidence.
std::string report_csv_row(const BenchmarkReport& r);
std::string report_csv_header();

}  // namespace qbench
