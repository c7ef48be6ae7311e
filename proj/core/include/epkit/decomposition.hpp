#pragma once

#include <map>
#include <vector>

#include "epkit/blocks.hpp"
#include "epkit/contraction.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Connected parts H(x) extending the disjoint balls B_r(x) to a partition of
 * V(G).  dist_to_center is the G-distance to the owning center.
 */
struct BallDecomposition {
    std::vector<VertexId> centers; // ascending
    int radius = 0;
    std::map<VertexId, VertexId> part_of;
    std::map<VertexId, std::vector<VertexId>> parts;
    std::map<VertexId, int> dist_to_center;

    const std::vector<VertexId>& part(VertexId center) const;
};

/**
 * Maximal vertex set with pairwise distance >= sep, grown greedily in
 * ascending id order; every vertex ends up within distance < sep of the set.
 * On a disconnected graph each component contributes its own members.
 */
std::vector<VertexId> separated_set(const Multigraph& g, int sep);

/**
 * Layered ball extension: vertices within distance r join their center, then
 * layer r+1 attaches to an adjacent part, then layer r+2, and so on.  Ties go
 * to the smallest center id.  Centers must be pairwise at distance >= 2r, so
 * parts can only contend for boundary vertices at distance exactly r; every
 * other vertex of B_r(x) is guaranteed to land in H(x).
 */
BallDecomposition ball_partition(const Multigraph& g, const std::vector<VertexId>& centers,
                                 int r);

/**
 * Ball-packing minor: contracts the layered trees grown from a maximal
 * 2m+1-separated set and removes parallel edges.  For m=0 the graph is
 * returned unchanged.  When girth(G) >= 8m+3 and min degree d >= 3 hold, the
 * result is checked to have min degree >= d(d-1)^m and each part to be an
 * induced tree; otherwise those guarantees are skipped.
 */
std::pair<Multigraph, ContractionMap> ko_minor(const Multigraph& g, int m);

/**
 * Block structure of one part H(x) relative to the center ball: H*(x) is the
 * union of blocks intersecting B_{r-l}(x), pre-leaves are the leaf-blocks of
 * H*(x), and the auxiliary tree T connects blocks sharing a vertex where one
 * is an ancestor-block of the other.  Block indices refer to block_info.
 */
struct PreLeafReport {
    VertexId center = kNoVertex;
    BlockDecomposition block_info;              // blocks of H(x)
    std::vector<int> hstar_blocks;              // blocks intersecting B_{r-l}(x)
    std::vector<int> pre_leaves;                // leaf-blocks of H*(x)
    int root_block = -1;                        // block containing the center
    std::map<int, std::vector<int>> tree_adj;   // T, on hstar_blocks
    std::map<int, std::vector<int>> ancestors;  // block -> ancestor-blocks toward x
    std::map<int, int> leaf_block_pre_leaf;     // leaf-block of H(x) -> its pre-leaf
};

/**
 * Requires that H(x) holds no cycle of length >= l (validated by bounded
 * search; failure raises invariant_violation since the caller's reductions
 * should have made it impossible).
 */
PreLeafReport pre_leaf_analysis(const Multigraph& g, const BallDecomposition& d,
                                VertexId x, int l);

} // namespace epkit
