#pragma once

#include <vector>

#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Maximum number of pairwise edge-disjoint u--v paths, with witnesses.  Exact
 * (unit-capacity max flow, BFS augmentation); loops are ignored.  The count is
 * 0 when u and v are disconnected.
 */
std::pair<int, std::vector<Path>> max_edge_disjoint_paths(const Multigraph& g,
                                                          VertexId u, VertexId v);

} // namespace epkit
