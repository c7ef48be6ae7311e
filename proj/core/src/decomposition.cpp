#include "epkit/decomposition.hpp"

#include <algorithm>
#include <set>

#include "epkit/errors.hpp"
#include "epkit/search.hpp"

namespace epkit {

const std::vector<VertexId>& BallDecomposition::part(VertexId center) const {
    auto it = parts.find(center);
    require(it != parts.end(), "part: no such center");
    return it->second;
}

std::vector<VertexId> separated_set(const Multigraph& g, int sep) {
    require(sep >= 1, "separated_set: separation must be positive");
    std::vector<VertexId> x;
    for (VertexId v : g.vertices()) {
        bool far = true;
        auto dist = bfs_distances(g, v);
        for (VertexId y : x) {
            auto it = dist.find(y);
            if (it != dist.end() && it->second < sep) {
                far = false;
                break;
            }
        }
        if (far) x.push_back(v);
    }
    return x;
}

BallDecomposition ball_partition(const Multigraph& g, const std::vector<VertexId>& centers,
                                 int r) {
    require(r >= 0, "ball_partition: negative radius");
    require(!centers.empty() || g.num_vertices() == 0, "ball_partition: no centers");

    BallDecomposition d;
    d.centers = centers;
    std::sort(d.centers.begin(), d.centers.end());
    require(std::adjacent_find(d.centers.begin(), d.centers.end()) == d.centers.end(),
            "ball_partition: repeated center");
    d.radius = r;

    std::map<VertexId, std::map<VertexId, int>> dist;
    for (VertexId x : d.centers) {
        require(g.has_vertex(x), "ball_partition: center does not exist");
        dist[x] = bfs_distances(g, x);
    }
    for (std::size_t i = 0; i < d.centers.size(); ++i)
        for (std::size_t j = i + 1; j < d.centers.size(); ++j) {
            auto it = dist[d.centers[i]].find(d.centers[j]);
            require(it == dist[d.centers[i]].end() || it->second >= 2 * r,
                    "ball_partition: centers closer than twice the radius");
        }

    // Distance to the set of centers; also catches uncovered components.
    std::map<VertexId, int> layer;
    int max_layer = 0;
    for (VertexId v : g.vertices()) {
        int best = -1;
        for (VertexId x : d.centers) {
            auto it = dist[x].find(v);
            if (it != dist[x].end() && (best < 0 || it->second < best)) best = it->second;
        }
        require(best >= 0, "ball_partition: vertex out of reach of every center");
        layer[v] = best;
        max_layer = std::max(max_layer, best);
    }

    // Core: distance <= r.  The owning center is unique except for boundary
    // vertices at distance exactly r, which the smallest center id wins.
    for (VertexId v : g.vertices()) {
        if (layer[v] > r) continue;
        for (VertexId x : d.centers) {
            auto it = dist[x].find(v);
            if (it != dist[x].end() && it->second == layer[v]) {
                d.part_of[v] = x;
                break;
            }
        }
    }
    // Layered extension, each layer anchored on the previous one only.
    for (int s = r + 1; s <= max_layer; ++s) {
        std::map<VertexId, VertexId> assignments;
        for (VertexId v : g.vertices()) {
            if (layer[v] != s) continue;
            VertexId best_center = kNoVertex;
            for (const IncidentEdge& ie : g.incident(v)) {
                if (ie.other == v || layer[ie.other] != s - 1) continue;
                VertexId c = d.part_of.at(ie.other);
                if (best_center == kNoVertex || c < best_center) best_center = c;
            }
            ensure(best_center != kNoVertex, "ball_partition: layer vertex has no anchor");
            assignments[v] = best_center;
        }
        d.part_of.insert(assignments.begin(), assignments.end());
    }

    for (const auto& [v, x] : d.part_of) {
        d.parts[x].push_back(v);
        d.dist_to_center[v] = dist[x].at(v);
    }
    for (VertexId x : d.centers)
        if (!d.parts.count(x)) d.parts[x] = {}; // cannot happen; keeps lookups total

    // Structural guarantees: parts are connected, and the ball B_r(x) stays in
    // its part apart from boundary ties.
    for (VertexId x : d.centers) {
        ensure(is_connected(g.induced_subgraph(d.parts[x])), "ball_partition: part disconnected");
    }
    for (VertexId v : g.vertices())
        for (VertexId x : d.centers) {
            auto it = dist[x].find(v);
            if (it == dist[x].end() || it->second > r) continue;
            ensure(d.part_of.at(v) == x || it->second == r,
                   "ball_partition: interior ball vertex left its part");
        }
    return d;
}

namespace {

ContractionMap identity_map(const Multigraph& g) {
    ContractionMap map;
    for (VertexId v : g.vertices()) map.vertex_preimages[v] = {v};
    for (EdgeId e : g.edges()) map.edge_original[e] = e;
    return map;
}

} // namespace

std::pair<Multigraph, ContractionMap> ko_minor(const Multigraph& g, int m) {
    require(m >= 0, "ko_minor: negative radius");
    if (m == 0) return {g, identity_map(g)};
    if (g.num_vertices() == 0) return {g, ContractionMap{}};

    std::vector<VertexId> x = separated_set(g, 2 * m + 1);
    BallDecomposition d = ball_partition(g, x, m);
    std::vector<std::vector<VertexId>> parts;
    for (VertexId c : d.centers) parts.push_back(d.part(c));
    auto [h, map] = quotient_simple(g, parts);

    int deg = g.min_degree();
    auto gl = girth_length(g);
    bool guaranteed = deg >= 3 && (!gl || *gl >= 8 * m + 3);
    if (guaranteed) {
        for (VertexId c : d.centers) {
            Multigraph part = g.induced_subgraph(d.part(c));
            ensure(part.num_edges() + 1 == part.num_vertices(),
                   "ko_minor: contracted part is not a tree");
        }
        std::map<std::pair<VertexId, VertexId>, int> between;
        for (EdgeId e : g.edges()) {
            auto [a, b] = g.endpoints(e);
            VertexId pa = d.part_of.at(a), pb = d.part_of.at(b);
            if (pa == pb) continue;
            ensure(++between[std::minmax(pa, pb)] <= 1,
                   "ko_minor: two parts joined by more than one edge");
        }
        long long target = deg;
        for (int i = 0; i < m; ++i) target *= deg - 1;
        ensure(h.min_degree() >= target, "ko_minor: minor misses the degree guarantee");
    }
    return {std::move(h), std::move(map)};
}

namespace {

// First block containing `target`, walking the block adjacency (shared cut
// vertices) from `from`; returns the visited block sequence excluding `from`.
std::vector<int> block_tree_route(const BlockDecomposition& bi, int from, VertexId target) {
    std::map<int, int> parent;
    std::vector<int> order{from};
    parent[from] = from;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int b = order[head];
        const auto& verts = bi.blocks[b].verts;
        if (std::binary_search(verts.begin(), verts.end(), target)) {
            std::vector<int> route;
            for (int cur = b; cur != from; cur = parent.at(cur)) route.push_back(cur);
            std::sort(route.begin(), route.end());
            return route;
        }
        for (VertexId v : verts) {
            if (!bi.is_cut(v)) continue;
            for (int nb : bi.blocks_of_vertex.at(v)) {
                if (parent.count(nb)) continue;
                parent[nb] = b;
                order.push_back(nb);
            }
        }
    }
    throw invariant_violation("block_tree_route: center not reachable in block structure");
}

} // namespace

PreLeafReport pre_leaf_analysis(const Multigraph& g, const BallDecomposition& d,
                                VertexId x, int l) {
    require(l >= 2, "pre_leaf_analysis: l must be at least 2");
    require(d.parts.count(x) > 0, "pre_leaf_analysis: not a center");

    const auto& verts = d.part(x);
    Multigraph h = g.induced_subgraph(verts);
    ensure(!shortest_cycle_geq(h, l, static_cast<int>(h.num_vertices())).has_value(),
           "pre_leaf_analysis: long cycle inside the part");

    PreLeafReport rep;
    rep.center = x;
    rep.block_info = blocks(h);
    const BlockDecomposition& bi = rep.block_info;
    int nb = static_cast<int>(bi.blocks.size());
    if (nb == 0) return rep;

    int rl = d.radius - l;
    for (int i = 0; i < nb; ++i)
        for (VertexId v : bi.blocks[i].verts)
            if (rl >= 0 && d.dist_to_center.at(v) <= rl) {
                rep.hstar_blocks.push_back(i);
                break;
            }
    rep.root_block = bi.blocks_of_vertex.at(x).front();

    // Ancestor-blocks via one canonical shortest path per block, cross-checked
    // against the walk through the block structure (path independence).
    std::map<VertexId, int> dist = bfs_distances(h, x);
    std::map<int, int> parent_block;
    for (int i = 0; i < nb; ++i) {
        VertexId best = kNoVertex;
        for (VertexId v : bi.blocks[i].verts)
            if (best == kNoVertex || dist.at(v) < dist.at(best)) best = v;
        if (dist.at(best) == 0) {
            rep.ancestors[i] = {};
            continue;
        }
        auto walk = bfs_shortest_path(h, best, x);
        ensure(walk.has_value(), "pre_leaf_analysis: block cut off from the center");
        std::set<int> anc;
        for (EdgeId e : walk->edges) anc.insert(bi.block_of_edge.at(e));
        ensure(!anc.count(i), "pre_leaf_analysis: shortest path reenters its block");
        rep.ancestors[i] = {anc.begin(), anc.end()};
        parent_block[i] = bi.block_of_edge.at(walk->edges.front());
        ensure(rep.ancestors.at(i) == block_tree_route(bi, i, x),
               "pre_leaf_analysis: ancestor set depends on the path");
    }

    // Auxiliary forest on the H* blocks (one root per block containing x).
    std::set<int> hstar(rep.hstar_blocks.begin(), rep.hstar_blocks.end());
    for (int i : rep.hstar_blocks) {
        auto it = parent_block.find(i);
        if (it == parent_block.end()) continue;
        ensure(hstar.count(it->second) > 0,
               "pre_leaf_analysis: ancestor of an H* block escaped H*");
        rep.tree_adj[i].push_back(it->second);
        rep.tree_adj[it->second].push_back(i);
    }
    for (auto& [b, adj] : rep.tree_adj) std::sort(adj.begin(), adj.end());

    // Pre-leaves = leaf-blocks of the induced H*; every block of H* must be a
    // block of H(x) (the induced union adds no glue edges).
    if (!rep.hstar_blocks.empty()) {
        std::set<VertexId> su;
        for (int i : rep.hstar_blocks)
            su.insert(bi.blocks[i].verts.begin(), bi.blocks[i].verts.end());
        std::vector<VertexId> sv(su.begin(), su.end());
        Multigraph hs = h.induced_subgraph(sv);
        BlockDecomposition ds = blocks(hs);
        ensure(ds.blocks.size() == rep.hstar_blocks.size(),
               "pre_leaf_analysis: H* blocks do not match blocks of H");
        std::map<std::vector<EdgeId>, int> by_edges;
        for (int i : rep.hstar_blocks) by_edges[bi.blocks[i].edges] = i;
        for (int j : ds.leaf_block_indices()) {
            auto it = by_edges.find(ds.blocks[j].edges);
            ensure(it != by_edges.end(), "pre_leaf_analysis: H* block is not a block of H");
            rep.pre_leaves.push_back(it->second);
        }
        std::sort(rep.pre_leaves.begin(), rep.pre_leaves.end());
        // Does not apply to blocks containing x: sibling blocks through x are
        // never ancestor-related, so the cut at x yields no tree edge.
        for (int i : rep.hstar_blocks) {
            const auto& bv = bi.blocks[i].verts;
            if (std::binary_search(bv.begin(), bv.end(), x)) continue;
            std::size_t deg = rep.tree_adj.count(i) ? rep.tree_adj.at(i).size() : 0;
            if (deg <= 1)
                ensure(std::binary_search(rep.pre_leaves.begin(), rep.pre_leaves.end(), i),
                       "pre_leaf_analysis: auxiliary-tree leaf is not a pre-leaf");
        }
    }

    // Unique pre-leaf per leaf-block (a block counts as its own candidate).
    std::set<int> pls(rep.pre_leaves.begin(), rep.pre_leaves.end());
    std::set<int> used_pre_leaves;
    for (int lb : bi.leaf_block_indices()) {
        std::vector<int> cands;
        for (int a : rep.ancestors.at(lb))
            if (pls.count(a)) cands.push_back(a);
        if (pls.count(lb)) cands.push_back(lb);
        if (cands.size() > 1)
            throw theorem_gap("pre_leaf_analysis: leaf-block has several pre-leaf ancestors");
        if (cands.size() == 1) {
            rep.leaf_block_pre_leaf[lb] = cands[0];
            used_pre_leaves.insert(cands[0]);
        }
    }
    if (used_pre_leaves.size() != pls.size())
        throw theorem_gap("pre_leaf_analysis: a pre-leaf reaches no leaf-block");
    return rep;
}

} // namespace epkit
