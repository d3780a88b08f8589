#include "qbench/routing.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace qbench {

std::vector<int> shortest_path(const ArchitectureSpec& arch, int from, int to) {
    std::vector<int> prev(static_cast<std::size_t>(arch.num_qubits), -1);
    std::vector<char> seen(static_cast<std::size_t>(arch.num_qubits), 0);
    std::queue<int> frontier;
    frontier.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        if (v == to) break;
        // neighbors in index order for deterministic routes
        for (int u = 0; u < arch.num_qubits; ++u) {
            if (!seen[static_cast<std::size_t>(u)] && arch.adjacent(v, u)) {
                seen[static_cast<std::size_t>(u)] = 1;
                prev[static_cast<std::size_t>(u)] = v;
                frontier.push(u);
            }
        }
    }
    if (!seen[static_cast<std::size_t>(to)])
        throw std::invalid_argument(arch.name + ": qubits " + std::to_string(from) + " and " +
                                    std::to_string(to) + " are not connected");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(prev[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

Circuit route(const Circuit& logical, const ArchitectureSpec& arch, std::vector<int> layout) {
    if (logical.num_qubits() > arch.num_qubits)
        throw std::invalid_argument("circuit is wider than architecture " + arch.name);

    if (layout.empty()) {
        layout.resize(static_cast<std::size_t>(logical.num_qubits()));
        for (int i = 0; i < logical.num_qubits(); ++i) layout[static_cast<std::size_t>(i)] = i;
    }
    if (static_cast<int>(layout.size()) != logical.num_qubits())
        throw std::invalid_argument("layout size does not match circuit width");
    std::set<int> used;
    for (int p : layout) {
        if (p < 0 || p >= arch.num_qubits)
            throw std::invalid_argument("layout entry outside physical register");
        if (!used.insert(p).second) throw std::invalid_argument("layout must be injective");
    }

    const Circuit expanded = macro_expand(logical);

    // log2phys tracks where each logical qubit currently lives.
    std::vector<int> log2phys = layout;
    auto apply_swap = [&](int pa, int pb) {
        for (int& p : log2phys) {
            if (p == pa) p = pb;
            else if (p == pb) p = pa;
        }
    };

    Circuit routed(arch.num_qubits, logical.num_clbits(), logical.label());
    for (const auto& g : expanded.gates()) {
        if (g.operands.size() >= 3)
            throw std::invalid_argument("routing supports one- and two-qubit gates; got " +
                                        kind_name(g.kind));
        Gate mapped = g;
        for (int& q : mapped.operands) q = log2phys[static_cast<std::size_t>(q)];

        if (mapped.operands.size() == 2 && !arch.adjacent(mapped.operands[0], mapped.operands[1])) {
            auto path = shortest_path(arch, mapped.operands[0], mapped.operands[1]);
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                routed.swap(path[i], path[i + 1]);
                apply_swap(path[i], path[i + 1]);
            }
            mapped.operands[0] = path[path.size() - 2];
        }
        routed.add(std::move(mapped));
    }
    return routed;
}

}  // namespace qbench
