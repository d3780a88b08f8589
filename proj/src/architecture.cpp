#include "qbench/architecture.hpp"

#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qbench {

using nlohmann::json;

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

namespace {

[[noreturn]] void missing(const std::string& what) {
    throw std::invalid_argument("missing noise parameter: " + what);
}

double lookup_gate_table_1q(const std::map<std::pair<std::string, int>, double>& table,
                            GateKind kind, int qubit) {
    if (auto it = table.find({kind_name(kind), qubit}); it != table.end()) return it->second;
    if (auto it = table.find({"*", qubit}); it != table.end()) return it->second;
    missing(kind_name(kind) + " on q" + std::to_string(qubit));
}

}  // namespace

double NoiseParameters::lookup_1q(GateKind kind, int qubit) const {
    return lookup_gate_table_1q(gate_error_1q, kind, qubit);
}

double NoiseParameters::lookup_2q(GateKind kind, Edge e) const {
    if (auto it = gate_error_2q.find({kind_name(kind), e}); it != gate_error_2q.end())
        return it->second;
    if (auto it = gate_error_2q.find({"*", e}); it != gate_error_2q.end()) return it->second;
    missing(kind_name(kind) + " on q" + std::to_string(e.first) + "_q" + std::to_string(e.second));
}

double NoiseParameters::lookup_prep(int qubit) const {
    if (auto it = prep_error.find(qubit); it != prep_error.end()) return it->second;
    missing("prep_error on q" + std::to_string(qubit));
}

double NoiseParameters::lookup_meas(int qubit) const {
    if (auto it = meas_error.find(qubit); it != meas_error.end()) return it->second;
    missing("meas_error on q" + std::to_string(qubit));
}

double NoiseParameters::lookup_t1(int qubit) const {
    if (auto it = t1_us.find(qubit); it != t1_us.end()) return it->second;
    missing("t1 on q" + std::to_string(qubit));
}

double NoiseParameters::lookup_t2(int qubit) const {
    if (auto it = t2_us.find(qubit); it != t2_us.end()) return it->second;
    missing("t2 on q" + std::to_string(qubit));
}

double ArchitectureSpec::duration_ns(GateKind kind, int arity) const {
    if (auto it = gate_durations_ns.find(kind_name(kind)); it != gate_durations_ns.end())
        return it->second;
    if (kind == GateKind::Measure) return 1000.0;
    return arity >= 2 ? 300.0 : 50.0;
}

void ArchitectureSpec::validate() const {
    if (num_qubits <= 0) throw std::invalid_argument(name + ": num_qubits must be positive");
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits)
            throw std::invalid_argument(name + ": edge endpoint outside qubit range");
        if (a == b) throw std::invalid_argument(name + ": self-loop edge");
    }
    if (num_qubits > 1) {
        std::vector<char> seen(static_cast<std::size_t>(num_qubits), 0);
        std::queue<int> frontier;
        frontier.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (const auto& [a, b] : edges) {
                int other = -1;
                if (a == v) other = b;
                if (b == v) other = a;
                if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    ++reached;
                    frontier.push(other);
                }
            }
        }
        if (reached != num_qubits)
            throw std::invalid_argument(name + ": coupling graph is not connected");
    }

    auto check_prob = [&](double p, const std::string& what) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument(name + ": " + what + " outside [0,1]");
    };
    for (const auto& [k, p] : noise.gate_error_1q) check_prob(p, "gate_error_1q " + k.first);
    for (const auto& [k, p] : noise.gate_error_2q) check_prob(p, "gate_error_2q " + k.first);
    for (const auto& [q, p] : noise.prep_error) check_prob(p, "prep_error q" + std::to_string(q));
    for (const auto& [q, p] : noise.meas_error) check_prob(p, "meas_error q" + std::to_string(q));
    for (const auto& [q, t] : noise.t1_us)
        if (t <= 0.0) throw std::invalid_argument(name + ": t1 must be positive");
    for (const auto& [q, t] : noise.t2_us) {
        if (t <= 0.0) throw std::invalid_argument(name + ": t2 must be positive");
        if (auto it = noise.t1_us.find(q); it != noise.t1_us.end() && t > 2.0 * it->second + 1e-12)
            throw std::invalid_argument(name + ": t2 exceeds 2*t1 on q" + std::to_string(q));
    }
    for (const auto& [kind, ns] : gate_durations_ns)
        if (ns < 0.0) throw std::invalid_argument(name + ": negative gate duration");
}

namespace {

int parse_qubit_key(const std::string& key, const std::string& origin) {
    if (key.size() < 2 || key[0] != 'q')
        throw std::invalid_argument(origin + ": bad qubit key '" + key + "' (expected q<i>)");
    return std::stoi(key.substr(1));
}

Edge parse_edge_key(const std::string& key, const std::string& origin) {
    auto sep = key.find('_');
    if (sep == std::string::npos)
        throw std::invalid_argument(origin + ": bad edge key '" + key + "' (expected q<i>_q<j>)");
    return make_edge(parse_qubit_key(key.substr(0, sep), origin),
                     parse_qubit_key(key.substr(sep + 1), origin));
}

}  // namespace

ArchitectureSpec parse_architecture(std::istream& in, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }

    ArchitectureSpec arch;
    arch.name = doc.at("name").get<std::string>();
    arch.num_qubits = doc.at("num_qubits").get<int>();
    for (const auto& pair : doc.at("edges")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument(origin + ": edges must be [a, b] pairs");
        arch.edges.insert(make_edge(pair[0].get<int>(), pair[1].get<int>()));
    }

    if (doc.contains("gate_durations_ns"))
        for (const auto& [kind, ns] : doc.at("gate_durations_ns").items())
            arch.gate_durations_ns[kind] = ns.get<double>();

    const json& noise = doc.at("noise");
    if (noise.contains("gate_error_1q"))
        for (const auto& [qkey, per_gate] : noise.at("gate_error_1q").items()) {
            int q = parse_qubit_key(qkey, origin);
            for (const auto& [gate, p] : per_gate.items())
                arch.noise.gate_error_1q[{gate, q}] = p.get<double>();
        }
    if (noise.contains("gate_error_2q"))
        for (const auto& [ekey, per_gate] : noise.at("gate_error_2q").items()) {
            Edge e = parse_edge_key(ekey, origin);
            for (const auto& [gate, p] : per_gate.items())
                arch.noise.gate_error_2q[{gate, e}] = p.get<double>();
        }
    auto read_per_qubit = [&](const char* field, std::map<int, double>& out) {
        if (!noise.contains(field)) return;
        for (const auto& [qkey, v] : noise.at(field).items())
            out[parse_qubit_key(qkey, origin)] = v.get<double>();
    };
    read_per_qubit("prep_error", arch.noise.prep_error);
    read_per_qubit("meas_error", arch.noise.meas_error);
    read_per_qubit("t1_us", arch.noise.t1_us);
    read_per_qubit("t2_us", arch.noise.t2_us);

    arch.validate();
    return arch;
}

ArchitectureSpec load_architecture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open architecture file: " + path);
    return parse_architecture(in, path);
}

ArchitectureSpec fully_connected(int num_qubits, double p1, double p2, double prep, double meas,
                                 double t1_us, double t2_us) {
    ArchitectureSpec arch;
    arch.name = "all-to-all-" + std::to_string(num_qubits);
    arch.num_qubits = num_qubits;
    for (int a = 0; a < num_qubits; ++a) {
        arch.noise.gate_error_1q[{"*", a}] = p1;
        arch.noise.prep_error[a] = prep;
        arch.noise.meas_error[a] = meas;
        arch.noise.t1_us[a] = t1_us;
        arch.noise.t2_us[a] = t2_us;
        for (int b = a + 1; b < num_qubits; ++b) {
            arch.edges.insert({a, b});
            arch.noise.gate_error_2q[{"*", {a, b}}] = p2;
        }
    }
    // zero-duration gates so the zero-noise fixture is exactly noiseless
    if (p1 == 0.0 && p2 == 0.0) {
        arch.gate_durations_ns["measure"] = 0.0;
        for (const char* k : {"x", "y", "z", "h", "s", "sdg", "t", "tdg", "rx", "ry", "rz",
                              "phase", "cx", "cz", "cphase", "swap", "unitary"})
            arch.gate_durations_ns[k] = 0.0;
    }
    arch.validate();
    return arch;
}

void apply_calibration_snapshot(NoiseParameters& noise, std::istream& rows) {
    std::string line;
    int lineno = 0;
    while (std::getline(rows, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("calibration row " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() < 3) fail("too few fields");
        const std::string& param = fields[0];
        try {
            if (param == "gate_error_1q") {
                if (fields.size() != 4) fail("expected gate_error_1q,q<i>,<gate>,<value>");
                noise.gate_error_1q[{fields[2], parse_qubit_key(fields[1], "row")}] =
                    std::stod(fields[3]);
            } else if (param == "gate_error_2q") {
                if (fields.size() != 4) fail("expected gate_error_2q,q<i>_q<j>,<gate>,<value>");
                noise.gate_error_2q[{fields[2], parse_edge_key(fields[1], "row")}] =
                    std::stod(fields[3]);
            } else if (param == "prep_error" || param == "meas_error" || param == "t1" ||
                       param == "t2") {
                if (fields.size() != 3) fail("expected " + param + ",q<i>,<value>");
                int q = parse_qubit_key(fields[1], "row");
                double v = std::stod(fields[2]);
                if (param == "prep_error") noise.prep_error[q] = v;
                else if (param == "meas_error") noise.meas_error[q] = v;
                else if (param == "t1") noise.t1_us[q] = v;
                else noise.t2_us[q] = v;
            } else {
                fail("unknown parameter '" + param + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
}

}  // namespace qbench
