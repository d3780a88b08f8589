// Command-line front end: run single experiments or the shipped suite,
// decompose Hamiltonians, and inspect circuit files.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbench/hamiltonian.hpp"
#include "qbench/io.hpp"
#include "qbench/runner.hpp"

namespace fs = std::filesystem;
using namespace qbench;

namespace {

void print_record(const RunRecord& r) {
    std::cout << "algorithm=" << r.report.algorithm << " machine=" << r.report.machine
              << " device=" << r.device_source << "\n"
              << "  alpha=" << r.report.alpha << " beta=" << r.report.beta
              << " gamma=" << r.report.gamma << " |alpha-gamma|=" << r.report.abs_gap << "\n"
              << "  estimation=" << to_string(r.report.estimation)
              << " confidence=" << to_string(r.report.confidence) << " shots=" << r.report.shots
              << "\n";
}

std::vector<std::string> default_machines(const std::string& data_dir) {
    std::vector<std::string> files;
    for (const char* name : {"bogota", "santiago", "casablanca"})
        files.push_back((fs::path(data_dir) / (std::string(name) + ".json")).string());
    return files;
}

int run_main(int argc, char** argv) {
    CLI::App app{"program benchmarks for quantum computers"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "run one experiment file");
    std::string experiment_file;
    run_cmd->add_option("experiment", experiment_file, "experiment JSON file")->required();
    std::optional<std::uint64_t> opt_seed, opt_shots;
    std::optional<std::string> opt_machine, opt_out, opt_counts, opt_calibration;
    run_cmd->add_option("--seed", opt_seed, "override RNG seed");
    run_cmd->add_option("--shots", opt_shots, "override shot count");
    run_cmd->add_option("--machine", opt_machine, "override architecture file");
    run_cmd->add_option("--out", opt_out, "override output directory");
    run_cmd->add_option("--counts", opt_counts, "ingest device counts from this file");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run a named preset suite");
    std::string preset = "table3";
    suite_cmd->add_option("preset", preset, "preset name (table3)")->required();
    std::vector<std::string> machines;
    suite_cmd->add_option("--machine", machines, "architecture file(s); default: shipped trio");
    std::string suite_out = "out/table3";
    std::uint64_t suite_shots = 100000, suite_seed = 2021;
    std::string data_dir = "data/architectures";
    suite_cmd->add_option("--out", suite_out, "output directory");
    suite_cmd->add_option("--shots", suite_shots, "shots per run");
    suite_cmd->add_option("--seed", suite_seed, "base seed");
    suite_cmd->add_option("--data-dir", data_dir, "directory holding the shipped machines");

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "Pauli-decompose a Hamiltonian");
    std::optional<std::string> hamiltonian_file;
    std::optional<int> cycle_nodes;
    double dec_time = 0.0, dec_eps = 0.1;
    std::optional<int> dec_reps;
    dec_cmd->add_option("hamiltonian", hamiltonian_file, "operator JSON file");
    dec_cmd->add_option("--cycle", cycle_nodes, "use the N-node cycle walk Hamiltonian");
    dec_cmd->add_option("--time", dec_time, "evolution time")->required();
    dec_cmd->add_option("--eps", dec_eps, "error budget for the repetition bound");
    dec_cmd->add_option("--reps", dec_reps, "fixed repetition count (overrides --eps)");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "gate count, workspace and depth");
    std::string circuit_file;
    stats_cmd->add_option("circuit", circuit_file, "circuit text file")->required();

    // report
    auto* report_cmd = app.add_subcommand("report", "re-render benchmark tables from a run dir");
    std::string run_dir;
    report_cmd->add_option("dir", run_dir, "directory with report.json files")->required();

    CLI11_PARSE(app, argc, argv);

    if (*run_cmd) {
        ExperimentSpec spec = load_experiment(experiment_file);
        if (opt_seed) spec.seed = *opt_seed;
        if (opt_shots) spec.shots = *opt_shots;
        if (opt_machine) spec.machine_file = *opt_machine;
        if (opt_out) spec.output_dir = *opt_out;
        if (opt_counts) spec.device_counts = *opt_counts;
        const RunRecord record = run_experiment(spec);
        print_record(record);
        if (!spec.output_dir.empty())
            std::cout << "artifacts written to " << spec.output_dir << "\n";
        return 0;
    }

    if (*suite_cmd) {
        if (preset != "table3") throw std::invalid_argument("unknown preset: " + preset);
        if (machines.empty()) machines = default_machines(data_dir);
        const auto records = run_table3_suite(machines, suite_shots, suite_seed, suite_out);
        for (const auto& r : records) print_record(r);
        std::cout << records.size() << " runs; summary at " << suite_out << "/summary.csv\n";
        return 0;
    }

    if (*dec_cmd) {
        if (hamiltonian_file.has_value() == cycle_nodes.has_value())
            throw std::invalid_argument("give either an operator file or --cycle N");
        const HermitianOperator h =
            cycle_nodes ? cycle_walk_hamiltonian(*cycle_nodes) : load_hermitian(*hamiltonian_file);
        const PauliDecomposition terms = pauli_decompose(h);
        const int r = dec_reps ? *dec_reps : trotter_reps(terms, dec_time, dec_eps);
        nlohmann::json doc = nlohmann::json::parse(decomposition_json(terms));
        doc["time"] = dec_time;
        doc["reps"] = r;
        doc["all_terms_commute"] = all_terms_commute(terms);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (*stats_cmd) {
        const Circuit c = load_circuit(circuit_file);
        const CircuitStats st = circuit_stats(c);
        std::cout << "gate_count " << st.gate_count << "\nworkspace " << st.workspace
                  << "\ndepth " << st.depth << "\n";
        return 0;
    }

    if (*report_cmd) {
        std::cout << "algorithm," << report_csv_header() << ",shots\n";
        std::vector<fs::path> reports;
        for (const auto& entry : fs::recursive_directory_iterator(run_dir))
            if (entry.is_regular_file() && entry.path().filename() == "report.json")
                reports.push_back(entry.path());
        std::sort(reports.begin(), reports.end());
        for (const auto& path : reports) {
            std::ifstream in(path);
            const auto doc = nlohmann::json::parse(in);
            std::cout << doc.at("algorithm").get<std::string>() << ','
                      << doc.at("machine").get<std::string>() << ',' << doc.at("alpha") << ','
                      << doc.at("beta") << ',' << doc.at("gamma") << ',' << doc.at("abs_gap")
                      << ',' << doc.at("estimation").get<std::string>() << ','
                      << doc.at("confidence").get<std::string>() << ',' << doc.at("shots")
                      << "\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const SimCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
