#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "qbench/gates.hpp"

namespace qbench {

using Edge = std::pair<int, int>;  // normalized low < high

Edge make_edge(int a, int b);

/// Per-qubit and per-pair device noise tables. Gate-error tables are keyed
/// by (gate name, qubit or edge); the gate name "*" acts as a per-qubit
/// wildcard so files need not enumerate the whole basis.
struct NoiseParameters {
    std::map<std::pair<std::string, int>, double> gate_error_1q;
    std::map<std::pair<std::string, Edge>, double> gate_error_2q;
    std::map<int, double> prep_error;   // p_m
    std::map<int, double> meas_error;   // p_s
    std::map<int, double> t1_us;
    std::map<int, double> t2_us;

    double lookup_1q(GateKind kind, int qubit) const;
    double lookup_2q(GateKind kind, Edge e) const;
    double lookup_prep(int qubit) const;
    double lookup_meas(int qubit) const;
    double lookup_t1(int qubit) const;
    double lookup_t2(int qubit) const;
};

/// Physical coupling graph plus calibration tables and gate durations.
struct ArchitectureSpec {
    std::string name;
    int num_qubits = 0;
    std::set<Edge> edges;
    NoiseParameters noise;
    std::map<std::string, double> gate_durations_ns;

    bool adjacent(int a, int b) const { return edges.count(make_edge(a, b)) > 0; }

    /// Duration for a gate kind; unlisted kinds fall back to 50 ns for
    /// one-qubit gates, 300 ns for two-qubit gates and 1000 ns for
    /// measurement (labeled defaults, not vendor calibration).
    double duration_ns(GateKind kind, int arity) const;

    /// Throws std::invalid_argument on any violated structural invariant:
    /// bad edge endpoints, self-loops, disconnected graph, probabilities
    /// outside [0,1], nonpositive times, or T2 > 2*T1.
    void validate() const;
};

ArchitectureSpec load_architecture(const std::string& path);
ArchitectureSpec parse_architecture(std::istream& in, const std::string& origin = "<stream>");

/// All-to-all test fixture with uniform parameters; zero-noise by default.
ArchitectureSpec fully_connected(int num_qubits, double p1 = 0.0, double p2 = 0.0,
                                 double prep = 0.0, double meas = 0.0, double t1_us = 1e9,
                                 double t2_us = 1e9);

/// Applies rows of a flat calibration snapshot onto existing tables.
/// Delimited text, one row per line:
///   gate_error_1q,<q>,<gate|*>,<value>
///   gate_error_2q,<qa>_<qb>,<gate|*>,<value>
///   prep_error,<q>,<value>      meas_error,<q>,<value>
///   t1,<q>,<value_us>           t2,<q>,<value_us>
/// Lines starting with '#' are comments.
void apply_calibration_snapshot(NoiseParameters& noise, std::istream& rows);

}  // namespace qbench
