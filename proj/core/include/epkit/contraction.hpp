#pragma once

#include <map>
#include <vector>

#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Records how a contracted graph maps back to the graph it was produced from.
 * vertex_preimages assigns every contracted-graph vertex its preimage set;
 * the sets partition the original vertex set.  edge_original maps every
 * surviving edge to the original edge it stands for (injective; the identity
 * whenever ids were preserved).
 */
struct ContractionMap {
    std::map<VertexId, std::vector<VertexId>> vertex_preimages;
    std::map<EdgeId, EdgeId> edge_original;

    const std::vector<VertexId>& preimage(VertexId v) const;
    EdgeId original_edge(EdgeId e) const;
    bool is_contracted(VertexId v) const { return preimage(v).size() > 1; }
};

enum class LoopPolicy { discard, keep };

/**
 * Contracts the connected vertex set S into one fresh vertex.  Edges with both
 * ends in S become loops (kept or discarded per policy); every other edge
 * keeps its id, reattached to the new vertex where needed.
 */
std::pair<Multigraph, ContractionMap> contract_vertex_set(const Multigraph& g,
                                                          const std::vector<VertexId>& s,
                                                          LoopPolicy policy);

/**
 * Contracts every part of a partition of V(g) into a fresh vertex and keeps
 * the result simple: loops are dropped, and of each parallel bundle only the
 * edge with the smallest id survives.  Parts must be connected and nonempty.
 */
std::pair<Multigraph, ContractionMap> quotient_simple(const Multigraph& g,
                                                      const std::vector<std::vector<VertexId>>& parts);

// Sanity checks an already-built map against the two graphs (partition,
// injectivity, endpoint consistency).  Throws invariant_violation on failure.
void check_contraction_map(const Multigraph& original, const Multigraph& contracted,
                           const ContractionMap& map);

/**
 * Expands a cycle of the contracted graph back into the original graph.
 * Every visit to a contracted vertex is replaced by a shortest path inside the
 * preimage part between the two attachment endpoints (nothing is inserted when
 * they coincide).  Output length is never below the input length.
 */
Cycle lift_cycle(const Multigraph& original, const ContractionMap& map, const Cycle& c);

} // namespace epkit
