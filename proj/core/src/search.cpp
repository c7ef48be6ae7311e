#include "epkit/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "epkit/errors.hpp"

namespace epkit {

namespace {

// BFS over the full graph from several sources at once.  Neighbours are
// visited in ascending edge-id order, which fixes parents deterministically.
struct BfsResult {
    std::map<VertexId, int> dist;
    std::map<VertexId, VertexId> parent_vertex;
    std::map<VertexId, EdgeId> parent_edge;
};

BfsResult bfs(const Multigraph& g, const std::vector<VertexId>& sources) {
    BfsResult r;
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
        require(g.has_vertex(s), "bfs: source vertex does not exist");
        if (!r.dist.count(s)) {
            r.dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        int du = r.dist.at(u);
        for (const IncidentEdge& ie : g.incident(u)) {
            if (ie.other == u) continue;
            if (r.dist.count(ie.other)) continue;
            r.dist[ie.other] = du + 1;
            r.parent_vertex[ie.other] = u;
            r.parent_edge[ie.other] = ie.edge;
            queue.push_back(ie.other);
        }
    }
    return r;
}

} // namespace

std::map<VertexId, int> bfs_distances(const Multigraph& g, VertexId src) {
    return bfs(g, {src}).dist;
}

std::map<VertexId, int> bfs_distances_multi(const Multigraph& g,
                                            const std::vector<VertexId>& sources) {
    require(!sources.empty(), "bfs_distances_multi: no sources");
    return bfs(g, sources).dist;
}

std::optional<Path> bfs_shortest_path(const Multigraph& g, VertexId a, VertexId b) {
    require(g.has_vertex(a) && g.has_vertex(b), "bfs_shortest_path: missing endpoint");
    BfsResult r = bfs(g, {a});
    if (!r.dist.count(b)) return std::nullopt;
    Path p;
    VertexId cur = b;
    p.verts.push_back(cur);
    while (cur != a) {
        p.edges.push_back(r.parent_edge.at(cur));
        cur = r.parent_vertex.at(cur);
        p.verts.push_back(cur);
    }
    std::reverse(p.verts.begin(), p.verts.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId v : g.vertices()) {
        if (seen.count(v)) continue;
        std::vector<VertexId> comp;
        for (const auto& [u, d] : bfs(g, {v}).dist) {
            (void)d;
            comp.push_back(u);
            seen.insert(u);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Multigraph& g) {
    if (g.num_vertices() == 0) return true;
    return bfs(g, {g.vertices().front()}).dist.size() == g.num_vertices();
}

int diameter(const Multigraph& g) {
    require(g.num_vertices() > 0, "diameter: empty graph");
    require(is_connected(g), "diameter: graph is disconnected");
    int best = 0;
    for (VertexId v : g.vertices()) {
        for (const auto& [u, d] : bfs(g, {v}).dist) {
            (void)u;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_acyclic(const Multigraph& g) {
    // Loops and parallel pairs are cycles; beyond that a union-find over the
    // remaining edges spots any simple cycle.
    std::map<VertexId, VertexId> root;
    for (VertexId v : g.vertices()) root[v] = v;
    auto find = [&](VertexId v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.endpoints(e);
        if (u == v) return false;
        VertexId ru = find(u), rv = find(v);
        if (ru == rv) return false;
        root[ru] = rv;
    }
    return true;
}

namespace {

// Lexicographically smallest loop / parallel-pair cycle, if any.
std::optional<Cycle> smallest_loop(const Multigraph& g) {
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.endpoints(e);
        if (u == v) return Cycle{{u}, {e}};
    }
    return std::nullopt;
}

std::optional<Cycle> smallest_digon(const Multigraph& g) {
    std::optional<Cycle> best;
    for (VertexId u : g.vertices()) {
        std::map<VertexId, std::vector<EdgeId>> bundle;
        for (const IncidentEdge& ie : g.incident(u)) {
            if (ie.other > u) bundle[ie.other].push_back(ie.edge);
        }
        for (const auto& [v, es] : bundle) {
            if (es.size() < 2) continue;
            Cycle c{{u, v}, {es[0], es[1]}};
            if (!best || canonical_edge_key(c) < canonical_edge_key(*best)) best = c;
        }
    }
    return best;
}

// Exact enumeration of cycles of one fixed length L >= 3.  Cycles are anchored
// at their minimum vertex and traversed in the direction whose first edge id is
// smaller than its last, so each cycle is generated exactly once.
struct FixedLengthSearch {
    const Multigraph& g;
    int target_len;
    VertexId anchor;
    std::map<VertexId, int> dist_to_anchor; // within the >= anchor subgraph
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    std::set<VertexId> on_path;
    std::optional<Cycle> best;

    void consider(const Cycle& c) {
        if (!best || canonical_edge_key(c) < canonical_edge_key(*best)) best = c;
    }

    void extend() {
        VertexId cur = verts.back();
        int depth = static_cast<int>(edges.size());
        if (depth == target_len - 1) {
            // Close back to the anchor with an edge id above the first one.
            for (const IncidentEdge& ie : g.incident(cur)) {
                if (ie.other != anchor || ie.edge <= edges.front()) continue;
                std::vector<EdgeId> cyc_edges = edges;
                cyc_edges.push_back(ie.edge);
                consider(Cycle{verts, cyc_edges});
            }
            return;
        }
        for (const IncidentEdge& ie : g.incident(cur)) {
            VertexId next = ie.other;
            if (next <= anchor || on_path.count(next)) continue;
            auto it = dist_to_anchor.find(next);
            if (it == dist_to_anchor.end()) continue;
            if (it->second > target_len - depth - 1) continue;
            verts.push_back(next);
            edges.push_back(ie.edge);
            on_path.insert(next);
            extend();
            on_path.erase(next);
            edges.pop_back();
            verts.pop_back();
        }
    }
};

std::optional<Cycle> fixed_length_cycle(const Multigraph& g, int len) {
    std::optional<Cycle> best;
    for (VertexId s : g.vertices()) {
        if (g.incident(s).size() < 2) continue;
        // Restrict to vertices >= s: the anchor is the cycle's minimum vertex.
        std::vector<VertexId> keep;
        for (VertexId v : g.vertices())
            if (v >= s) keep.push_back(v);
        Multigraph h = g.induced_subgraph(keep);
        FixedLengthSearch search{g, len, s, bfs_distances(h, s), {s}, {}, {s}, {}};
        search.extend();
        if (search.best) {
            if (!best || canonical_edge_key(*search.best) < canonical_edge_key(*best))
                best = search.best;
        }
    }
    return best;
}

} // namespace

std::optional<int> girth_length(const Multigraph& g) {
    if (smallest_loop(g)) return 1;
    if (smallest_digon(g)) return 2;
    // Simple support graph: shortest cycle via a BFS from every vertex.  A
    // non-tree edge {u,v} with both distances known closes a cycle of length
    // dist(u) + dist(v) + 1; the minimum over all sources is exact.
    int best = std::numeric_limits<int>::max();
    for (VertexId s : g.vertices()) {
        BfsResult r = bfs(g, {s});
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.endpoints(e);
            if (!r.dist.count(u) || !r.dist.count(v)) continue;
            auto pu = r.parent_edge.find(u);
            auto pv = r.parent_edge.find(v);
            if ((pu != r.parent_edge.end() && pu->second == e) ||
                (pv != r.parent_edge.end() && pv->second == e))
                continue; // tree edge
            best = std::min(best, r.dist.at(u) + r.dist.at(v) + 1);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<Cycle> shortest_cycle_geq(const Multigraph& g, int lmin, int lmax) {
    lmin = std::max(lmin, 1);
    if (lmax < lmin) return std::nullopt;
    if (lmin <= 1) {
        if (auto c = smallest_loop(g)) return c;
        lmin = 2;
    }
    if (lmin <= 2) {
        if (auto c = smallest_digon(g)) return c;
        lmin = 3;
    }
    // Beyond digons a cycle visits distinct vertices.
    lmax = std::min<long long>(lmax, static_cast<long long>(g.num_vertices()));
    // Skip straight to the first candidate length a BFS sweep allows.
    if (auto gl = girth_length(g)) lmin = std::max(lmin, *gl);
    for (int len = lmin; len <= lmax; ++len) {
        if (auto c = fixed_length_cycle(g, len)) return c;
    }
    return std::nullopt;
}

std::optional<std::pair<int, Cycle>> girth(const Multigraph& g) {
    auto len = girth_length(g);
    if (!len) return std::nullopt;
    auto c = shortest_cycle_geq(g, *len, *len);
    ensure(c.has_value(), "girth: BFS length estimate had no witness cycle");
    return std::make_pair(*len, *c);
}

} // namespace epkit
