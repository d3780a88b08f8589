#include "qbench/io.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qbench {

using nlohmann::json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

json parse_json(std::istream& in, const std::string& origin) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
}

}  // namespace

Circuit parse_circuit(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument(origin + ":" + std::to_string(lineno) + ": " + why);
    };

    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!circuit) {
            if (tokens[0] != "qubits" || tokens.size() < 2)
                throw fail("expected header 'qubits <n> [clbits <m>]'");
            const int nq = std::stoi(tokens[1]);
            int nc = 0;
            if (tokens.size() == 4 && tokens[2] == "clbits") nc = std::stoi(tokens[3]);
            else if (tokens.size() != 2) throw fail("expected header 'qubits <n> [clbits <m>]'");
            circuit.emplace(nq, nc);
            continue;
        }

        const auto kind = kind_from_name(tokens[0]);
        if (!kind) throw fail("unknown gate '" + tokens[0] + "'");
        try {
            if (*kind == GateKind::Measure) {
                if (tokens.size() != 4 || tokens[2] != "->")
                    throw fail("expected 'measure <q> -> <c>'");
                circuit->measure(std::stoi(tokens[1]), std::stoi(tokens[3]));
            } else if (*kind == GateKind::Unitary) {
                throw fail("opaque unitaries have no text form");
            } else if (kind_is_parameterized(*kind)) {
                if (tokens.size() < 3) throw fail("expected '<gate> <angle> <qubits...>'");
                const double angle = std::stod(tokens[1]);
                std::vector<int> qs;
                for (std::size_t i = 2; i < tokens.size(); ++i) qs.push_back(std::stoi(tokens[i]));
                circuit->add(make_rotation(*kind, angle, std::move(qs)));
            } else {
                std::vector<int> qs;
                for (std::size_t i = 1; i < tokens.size(); ++i) qs.push_back(std::stoi(tokens[i]));
                circuit->add(make_gate(*kind, std::move(qs)));
            }
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    if (!circuit) throw std::invalid_argument(origin + ": empty circuit file");
    return *circuit;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    return parse_circuit(in, path);
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    os << "qubits " << c.num_qubits() << " clbits " << c.num_clbits() << "\n";
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Unitary)
            throw std::invalid_argument("opaque unitaries have no text form");
        if (g.kind == GateKind::Measure) {
            os << "measure " << g.operands[0] << " -> " << *g.clbit << "\n";
            continue;
        }
        os << kind_name(g.kind);
        if (g.angle) os << ' ' << *g.angle;
        for (int q : g.operands) os << ' ' << q;
        os << "\n";
    }
    return os.str();
}

Counts parse_counts(std::istream& in, const std::string& origin) {
    const json doc = parse_json(in, origin);
    Counts c;
    if (!doc.contains("shots") || !doc.contains("counts"))
        throw std::invalid_argument(origin + ": counts file needs 'shots' and 'counts'");
    if (!doc.at("shots").is_number_unsigned())
        throw std::invalid_argument(origin + ": shots must be a nonnegative integer");
    c.shots = doc.at("shots").get<std::uint64_t>();
    std::size_t width = 0;
    std::uint64_t sum = 0;
    for (const auto& [label, count] : doc.at("counts").items()) {
        for (char ch : label)
            if (ch != '0' && ch != '1')
                throw std::invalid_argument(origin + ": malformed label '" + label + "'");
        if (width == 0) width = label.size();
        if (label.size() != width)
            throw std::invalid_argument(origin + ": labels differ in width");
        if (!count.is_number_unsigned())
            throw std::invalid_argument(origin + ": negative or non-integer count for '" + label +
                                        "'");
        c.counts[label] = count.get<std::uint64_t>();
        sum += c.counts[label];
    }
    if (sum != c.shots)
        throw std::invalid_argument(origin + ": shots mismatch (counts sum to " +
                                    std::to_string(sum) + ", shots field says " +
                                    std::to_string(c.shots) + ")");
    c.machine = doc.value("machine", "");
    c.timestamp = doc.value("timestamp", "");
    return c;
}

Counts load_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open counts file: " + path);
    return parse_counts(in, path);
}

void write_counts(const Counts& c, const std::string& path) {
    json doc;
    doc["shots"] = c.shots;
    doc["counts"] = json::object();
    for (const auto& [label, count] : c.counts) doc["counts"][label] = count;
    if (!c.machine.empty()) doc["machine"] = c.machine;
    if (!c.timestamp.empty()) doc["timestamp"] = c.timestamp;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write counts file: " + path);
    out << doc.dump(2) << "\n";
}

std::string distribution_json(const OutcomeDistribution& d) {
    json doc;
    doc["num_clbits"] = d.num_clbits;
    doc["probs"] = json::object();
    for (const auto& [label, p] : d.probs) doc["probs"][label] = p;
    return doc.dump(2);
}

std::string decomposition_json(const PauliDecomposition& d) {
    json doc;
    doc["num_qubits"] = d.num_qubits;
    doc["terms"] = json::array();
    for (const auto& t : d.terms)
        doc["terms"].push_back(json{{"string", t.string}, {"coefficient", t.coefficient}});
    return doc.dump(2);
}

PauliDecomposition parse_decomposition(std::istream& in, const std::string& origin) {
    const json doc = parse_json(in, origin);
    PauliDecomposition d;
    d.num_qubits = doc.at("num_qubits").get<int>();
    for (const auto& t : doc.at("terms"))
        d.terms.push_back({t.at("string").get<std::string>(), t.at("coefficient").get<double>()});
    return d;
}

HermitianOperator load_hermitian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open operator file: " + path);
    const json doc = parse_json(in, path);
    HermitianOperator h;
    h.num_qubits = doc.at("num_qubits").get<int>();
    const std::size_t dim = std::size_t{1} << h.num_qubits;
    const auto& entries = doc.at("matrix");
    if (entries.size() != dim * dim)
        throw std::invalid_argument(path + ": matrix needs " + std::to_string(dim * dim) +
                                    " [re, im] entries");
    h.matrix = CMatrix(dim);
    for (std::size_t i = 0; i < dim * dim; ++i)
        h.matrix.a[i] = cxd{entries[i][0].get<double>(), entries[i][1].get<double>()};
    h.validate(1e-10);
    return h;
}

AlgorithmConfig algorithm_config_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("algorithm config: ") + e.what());
    }
    AlgorithmConfig cfg;
    const auto kind = algorithm_from_name(doc.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown algorithm kind");
    cfg.kind = *kind;
    cfg.state_qubits = doc.at("state_qubits").get<int>();
    if (doc.contains("steps")) cfg.steps = doc.at("steps").get<int>();
    if (doc.contains("time")) cfg.time = doc.at("time").get<double>();
    if (doc.contains("phase")) cfg.phase = doc.at("phase").get<double>();
    if (doc.contains("marked_item")) cfg.marked_item = doc.at("marked_item").get<std::uint64_t>();
    if (doc.contains("iterations")) cfg.iterations = doc.at("iterations").get<int>();
    if (doc.contains("trotter_r")) cfg.trotter_r = doc.at("trotter_r").get<int>();
    cfg.validate();
    return cfg;
}

std::string algorithm_config_json(const AlgorithmConfig& cfg) {
    json doc;
    doc["kind"] = cfg.algorithm();
    doc["state_qubits"] = cfg.state_qubits;
    if (cfg.steps) doc["steps"] = *cfg.steps;
    if (cfg.time) doc["time"] = *cfg.time;
    if (cfg.phase) doc["phase"] = *cfg.phase;
    if (cfg.marked_item) doc["marked_item"] = *cfg.marked_item;
    if (cfg.iterations) doc["iterations"] = *cfg.iterations;
    if (cfg.trotter_r) doc["trotter_r"] = *cfg.trotter_r;
    return doc.dump(2);
}

std::string report_json(const BenchmarkReport& r) {
    json doc;
    doc["machine"] = r.machine;
    doc["algorithm"] = r.algorithm;
    doc["shots"] = r.shots;
    doc["alpha"] = r.alpha;
    doc["beta"] = r.beta;
    doc["gamma"] = r.gamma;
    doc["abs_gap"] = r.abs_gap;
    doc["estimation"] = to_string(r.estimation);
    doc["confidence"] = to_string(r.confidence);
    return doc.dump(2);
}

std::string iso8601_now() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace qbench
