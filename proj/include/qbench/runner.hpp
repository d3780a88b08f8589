#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbench/algorithms.hpp"
#include "qbench/architecture.hpp"
#include "qbench/density.hpp"
#include "qbench/metrics.hpp"

namespace qbench {

/// One end-to-end benchmark run: which circuit, which machine file, where
/// the device distribution comes from (an ingested counts file, or the
/// synthetic stand-in when none is given), and how outputs are produced.
struct ExperimentSpec {
    AlgorithmConfig algorithm;
    std::string machine_file;
    std::optional<std::string> device_counts;  // ingested when present
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::optional<std::vector<int>> layout;  // identity when absent
    std::string output_dir;                  // no artifacts when empty

    /// Stand-in device controls: each noise parameter is scaled by an
    /// independent log-normal factor exp(sigma * z) to model calibration
    /// drift, then the perturbed model is sampled at `shots`. Exact mode
    /// skips the sampling and is for limit checks.
    double standin_sigma = 0.2;
    bool standin_exact = false;

    NoisySimOptions noisy_options;
};

struct RunRecord {
    ExperimentSpec spec;
    OutcomeDistribution device;
    OutcomeDistribution noisy;
    OutcomeDistribution ideal;
    BenchmarkReport report;
    std::map<std::string, double> wall_times_s;
    std::string device_source;  // counts path or "synthetic-standin"
};

/// Independently scaled copy of the architecture's noise tables
/// (log-normal factors, deterministic in `seed`). Probabilities clamp to
/// [0,1]; T2 stays below 2*T1.
ArchitectureSpec perturb_noise(const ArchitectureSpec& arch, double sigma, std::uint64_t seed);

Counts ingest_counts(const std::string& path);

RunRecord run_experiment(const ExperimentSpec& spec);

/// Writes the per-comparison distribution tables (state, p_device, p_noisy,
/// p_ideal over all labels), the benchmark summary row, the report JSON and
/// the device counts file into `dir`.
void emit_plot_data(const RunRecord& record, const std::string& dir);

/// The six shipped benchmark configurations (walk, continuous walk and its
/// product-formula circuit, phase estimation, search with and without
/// ancilla work qubits).
std::vector<AlgorithmConfig> table3_configs();

/// Runs every table3 config against every machine file, skipping
/// combinations wider than the machine. Artifacts land under
/// out_dir/<algorithm>_<machine>/ when out_dir is nonempty.
std::vector<RunRecord> run_table3_suite(const std::vector<std::string>& machine_files,
                                        std::uint64_t shots, std::uint64_t seed,
                                        const std::string& out_dir);

ExperimentSpec load_experiment(const std::string& path);

}  // namespace qbench
