#pragma once

#include <map>
#include <optional>
#include <vector>

#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

// Distances from src to every reachable vertex (unreachable vertices absent).
std::map<VertexId, int> bfs_distances(const Multigraph& g, VertexId src);

// Distance to the nearest of `sources` for every reachable vertex.
std::map<VertexId, int> bfs_distances_multi(const Multigraph& g,
                                            const std::vector<VertexId>& sources);

// Deterministic shortest path (BFS scanning neighbours in ascending edge-id
// order); absent when b is unreachable from a.
std::optional<Path> bfs_shortest_path(const Multigraph& g, VertexId a, VertexId b);

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Longest shortest-path distance; requires a connected non-empty graph.
int diameter(const Multigraph& g);

// True when g has no cycle at all (no loop, no parallel pair, no simple cycle).
bool is_acyclic(const Multigraph& g);

/**
 * Smallest cycle with lmin <= length <= lmax, under the convention that a loop
 * has length 1 and a parallel pair length 2.  Among all cycles of the minimal
 * qualifying length the one with the lexicographically smallest canonical
 * edge-id sequence is returned, so the choice is reproducible.  The search is
 * an exact depth-bounded walk enumeration.
 */
std::optional<Cycle> shortest_cycle_geq(const Multigraph& g, int lmin, int lmax);

// Shortest long cycle with length capped at l_max; absent if none exists.
inline std::optional<Cycle> bounded_long_cycle(const Multigraph& g, int l, int l_max) {
    return shortest_cycle_geq(g, l, l_max);
}

// Girth with a witness cycle (the canonical shortest one); absent when acyclic.
std::optional<std::pair<int, Cycle>> girth(const Multigraph& g);

// Girth length only, via BFS sweeps (used internally and as a cross-check).
std::optional<int> girth_length(const Multigraph& g);

} // namespace epkit
