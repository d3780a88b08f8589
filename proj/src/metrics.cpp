#include "qbench/metrics.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qbench {

double hellinger(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (std::abs(p.total() - 1.0) > 1e-6 || std::abs(q.total() - 1.0) > 1e-6)
        throw std::invalid_argument("hellinger: distributions must be normalized");

    std::set<std::string> support;
    for (const auto& [label, _] : p.probs) support.insert(label);
    for (const auto& [label, _] : q.probs) support.insert(label);

    double sum = 0.0;
    for (const auto& label : support) {
        const double d = std::sqrt(p.prob(label)) - std::sqrt(q.prob(label));
        sum += d * d;
    }
    return std::sqrt(0.5 * sum);
}

std::string to_string(Estimation e) {
    switch (e) {
        case Estimation::Overestimate: return "overestimate";
        case Estimation::Underestimate: return "underestimate";
        case Estimation::Exact: return "exact";
    }
    return "?";
}

std::string to_string(Confidence c) {
    return c == Confidence::High ? "high" : "low";
}

BenchmarkReport report_from_distances(double alpha, double beta, double gamma,
                                      const ReportMeta& meta) {
    for (double d : {alpha, beta, gamma})
        if (d < 0.0 || d > 1.0 + 1e-12)
            throw std::invalid_argument("benchmark distances must lie in [0,1]");

    BenchmarkReport r;
    r.alpha = alpha;
    r.beta = beta;
    r.gamma = gamma;
    r.abs_gap = std::abs(alpha - gamma);
    if (r.abs_gap < 1e-12) r.estimation = Estimation::Exact;
    else if (alpha > gamma) r.estimation = Estimation::Underestimate;
    else r.estimation = Estimation::Overestimate;
    r.confidence = beta >= r.abs_gap ? Confidence::High : Confidence::Low;
    r.machine = meta.machine;
    r.algorithm = meta.algorithm;
    r.shots = meta.shots;
    return r;
}

BenchmarkReport compute_benchmarks(const OutcomeDistribution& device,
                                   const OutcomeDistribution& noisy,
                                   const OutcomeDistribution& ideal, const ReportMeta& meta) {
    if (device.num_clbits != noisy.num_clbits || noisy.num_clbits != ideal.num_clbits)
        throw std::invalid_argument("benchmark distributions differ in classical width");
    return report_from_distances(hellinger(device, ideal), hellinger(device, noisy),
                                 hellinger(noisy, ideal), meta);
}

OutcomeDistribution counts_to_distribution(const Counts& c) {
    if (c.shots == 0) throw std::invalid_argument("counts have zero shots");
    OutcomeDistribution dist;
    dist.num_clbits = c.counts.empty() ? 0 : static_cast<int>(c.counts.begin()->first.size());
    for (const auto& [label, count] : c.counts)
        dist.probs[label] = static_cast<double>(count) / static_cast<double>(c.shots);
    return dist;
}

std::string report_csv_header() {
    return "machine,alpha,beta,gamma,abs_gap,estimation,confidence";
}

std::string report_csv_row(const BenchmarkReport& r) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << r.machine << ',' << r.alpha << ',' << r.beta << ',' << r.gamma << ','
       << r.abs_gap << ',' << to_string(r.estimation) << ',' << to_string(r.confidence);
    return os.str();
}

}  // namespace qbench
