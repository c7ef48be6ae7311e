#include "epkit/blocks.hpp"

#include <algorithm>
#include <set>

#include "epkit/errors.hpp"

namespace epkit {

bool BlockDecomposition::is_cut(VertexId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::leaf_block_indices() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (block_cuts[i].size() <= 1) out.push_back(i);
    return out;
}

namespace {

// Edge-stack DFS.  Parallel edges to the parent count as back edges (only the
// tree edge itself is skipped), which is what makes digons biconnected.
struct BlockDfs {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<EdgeId> stack;
    std::vector<Block> out;
    int timer = 0;

    explicit BlockDfs(const Multigraph& g)
        : g(g), disc(g.max_vertex_id_bound(), 0), low(g.max_vertex_id_bound(), 0) {}

    void flush_block(EdgeId until) {
        Block b;
        while (true) {
            EdgeId e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            if (e == until) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::set<VertexId> vs;
        for (EdgeId e : b.edges) {
            auto [a, c] = g.endpoints(e);
            vs.insert(a);
            vs.insert(c);
        }
        b.verts.assign(vs.begin(), vs.end());
        out.push_back(std::move(b));
    }

    void run(VertexId u, EdgeId parent_edge) {
        disc[u] = low[u] = ++timer;
        for (const IncidentEdge& ie : g.incident(u)) {
            if (ie.edge == parent_edge) continue;
            if (ie.other == u) {
                out.push_back(Block{{ie.edge}, {u}});
                continue;
            }
            if (disc[ie.other] == 0) {
                stack.push_back(ie.edge);
                run(ie.other, ie.edge);
                low[u] = std::min(low[u], low[ie.other]);
                if (low[ie.other] >= disc[u]) flush_block(ie.edge);
            } else if (disc[ie.other] < disc[u]) {
                stack.push_back(ie.edge);
                low[u] = std::min(low[u], disc[ie.other]);
            }
        }
    }
};

} // namespace

BlockDecomposition blocks(const Multigraph& g) {
    BlockDfs dfs(g);
    for (VertexId v : g.vertices())
        if (dfs.disc[v] == 0) dfs.run(v, kNoEdge);
    ensure(dfs.stack.empty(), "blocks: edge stack not drained");

    BlockDecomposition d;
    d.blocks = std::move(dfs.out);
    std::sort(d.blocks.begin(), d.blocks.end(),
              [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });

    for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i) {
        for (EdgeId e : d.blocks[i].edges) d.block_of_edge[e] = i;
        for (VertexId v : d.blocks[i].verts) d.blocks_of_vertex[v].push_back(i);
    }
    for (const auto& [v, bs] : d.blocks_of_vertex)
        if (bs.size() >= 2) d.cut_vertices.push_back(v);

    d.block_cuts.resize(d.blocks.size());
    for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i)
        for (VertexId v : d.blocks[i].verts)
            if (d.is_cut(v)) d.block_cuts[i].push_back(v);
    return d;
}

} // namespace epkit
