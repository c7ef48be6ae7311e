#pragma once

#include <map>
#include <vector>

#include "epkit/multigraph.hpp"

namespace epkit {

struct Block {
    std::vector<EdgeId> edges;   // ascending
    std::vector<VertexId> verts; // ascending, induced by the edges
};

/**
 * Biconnected decomposition of a multigraph.  Blocks partition the edge set;
 * bridges and loops are single-edge blocks.  A cut vertex is a vertex lying in
 * two or more blocks (for loopless graphs this is the usual articulation-vertex
 * notion; a loop attaching to an otherwise used vertex counts as well, which
 * keeps "two blocks share at most one vertex, a cut vertex" true throughout).
 * Isolated vertices belong to no block.
 */
struct BlockDecomposition {
    std::vector<Block> blocks; // sorted by smallest edge id
    std::vector<VertexId> cut_vertices;
    std::map<VertexId, std::vector<int>> blocks_of_vertex;
    std::map<EdgeId, int> block_of_edge;
    std::vector<std::vector<VertexId>> block_cuts; // cut vertices inside each block

    bool is_cut(VertexId v) const;
    // Blocks containing at most one cut vertex.
    std::vector<int> leaf_block_indices() const;
};

BlockDecomposition blocks(const Multigraph& g);

} // namespace epkit
