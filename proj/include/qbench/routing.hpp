#pragma once

#include <vector>

#include "qbench/architecture.hpp"
#include "qbench/circuit.hpp"

namespace qbench {

/// Maps a logical circuit onto physical qubits and inserts SWAP chains so
/// every two-qubit gate acts on a coupled pair. CCX/MCX are lowered to the
/// two-qubit basis first. The live logical-to-physical mapping is carried
/// forward after each inserted SWAP; there is no swap-back pass, so
/// measurement gates land on whichever physical qubit holds the logical one
/// at that point.
///
/// `layout` maps logical index i to layout[i]; it must be injective and in
/// range. Empty layout means identity.
Circuit route(const Circuit& c, const ArchitectureSpec& arch, std::vector<int> layout = {});

/// BFS shortest path between two physical qubits (inclusive endpoints);
/// throws if unreachable.
std::vector<int> shortest_path(const ArchitectureSpec& arch, int from, int to);

}  // namespace qbench
