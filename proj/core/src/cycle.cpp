#include "epkit/cycle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "epkit/errors.hpp"

namespace epkit {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool edge_matches(const Multigraph& g, EdgeId e, VertexId a, VertexId b, std::string* why) {
    if (!g.has_edge(e)) return fail(why, "edge not in graph");
    auto [u, v] = g.endpoints(e);
    if (!((u == a && v == b) || (u == b && v == a)))
        return fail(why, "edge endpoints do not match the vertex sequence");
    return true;
}

} // namespace

bool validate_cycle(const Multigraph& g, const Cycle& c, std::string* why) {
    const std::size_t len = c.edges.size();
    if (len == 0) return fail(why, "empty cycle");
    if (c.verts.size() != len) return fail(why, "vertex/edge count mismatch");

    std::set<EdgeId> edge_set(c.edges.begin(), c.edges.end());
    if (edge_set.size() != len) return fail(why, "repeated edge");

    for (std::size_t i = 0; i < len; ++i) {
        VertexId a = c.verts[i];
        VertexId b = c.verts[(i + 1) % len];
        if (!g.has_vertex(a)) return fail(why, "vertex not in graph");
        if (!edge_matches(g, c.edges[i], a, b, why)) return false;
    }

    if (len == 2) {
        if (c.verts[0] == c.verts[1]) return fail(why, "digon with repeated vertex");
    } else {
        std::set<VertexId> vert_set(c.verts.begin(), c.verts.end());
        if (vert_set.size() != len) return fail(why, "repeated vertex in cycle of length >= 3");
    }
    return true;
}

bool validate_path(const Multigraph& g, const Path& p, std::string* why) {
    if (p.verts.empty()) return fail(why, "empty path");
    if (p.verts.size() != p.edges.size() + 1) return fail(why, "vertex/edge count mismatch");

    std::set<EdgeId> edge_set(p.edges.begin(), p.edges.end());
    if (edge_set.size() != p.edges.size()) return fail(why, "repeated edge");
    std::set<VertexId> vert_set(p.verts.begin(), p.verts.end());
    if (vert_set.size() != p.verts.size()) return fail(why, "repeated vertex");

    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (!g.has_vertex(p.verts[i])) return fail(why, "vertex not in graph");
        if (!edge_matches(g, p.edges[i], p.verts[i], p.verts[i + 1], why)) return false;
    }
    return true;
}

std::vector<EdgeId> canonical_edge_key(const Cycle& c) {
    const std::size_t len = c.edges.size();
    std::vector<EdgeId> best;
    std::vector<EdgeId> cur(len);
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<EdgeId> seq = c.edges;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (std::size_t rot = 0; rot < len; ++rot) {
            for (std::size_t i = 0; i < len; ++i) cur[i] = seq[(rot + i) % len];
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

Cycle cycle_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges) {
    require(!edges.empty(), "cycle_from_edges: empty edge list");
    for (EdgeId e : edges) require(g.has_edge(e), "cycle_from_edges: unknown edge id");

    if (edges.size() == 1) {
        auto [u, v] = g.endpoints(edges[0]);
        require(u == v, "cycle_from_edges: single non-loop edge");
        return Cycle{{u}, {edges[0]}};
    }

    // The order of `edges` does not matter: walk the incidence structure.
    std::map<VertexId, std::vector<EdgeId>> inc;
    std::set<EdgeId> pool(edges.begin(), edges.end());
    require(pool.size() == edges.size(), "cycle_from_edges: repeated edge id");
    for (EdgeId e : edges) {
        auto [u, v] = g.endpoints(e);
        inc[u].push_back(e);
        inc[v].push_back(e);
    }
    for (const auto& [v, at] : inc)
        require(at.size() == 2, "cycle_from_edges: vertex " + std::to_string(v) +
                                    " does not have exactly two incidences");

    Cycle c;
    VertexId start = inc.begin()->first;
    VertexId cur = start;
    EdgeId next = std::min(inc[start][0], inc[start][1]);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        c.verts.push_back(cur);
        c.edges.push_back(next);
        pool.erase(next);
        cur = g.other_end(next, cur);
        if (i + 1 < edges.size()) {
            const auto& at = inc[cur];
            EdgeId prev = next;
            next = kNoEdge;
            for (EdgeId cand : at)
                if (cand != prev && pool.count(cand)) next = cand;
            require(next != kNoEdge, "cycle_from_edges: edge set is not one closed cycle");
        }
    }
    require(cur == start, "cycle_from_edges: edge list does not close up");
    std::string why;
    bool valid = validate_cycle(g, c, &why);
    require(valid, "cycle_from_edges: invalid cycle: " + why);
    return c;
}

bool cycles_edge_disjoint(const std::vector<Cycle>& cs) {
    std::set<EdgeId> seen;
    for (const Cycle& c : cs)
        for (EdgeId e : c.edges)
            if (!seen.insert(e).second) return false;
    return true;
}

bool cycles_vertex_disjoint(const std::vector<Cycle>& cs) {
    std::set<VertexId> seen;
    for (const Cycle& c : cs)
        for (VertexId v : c.verts)
            if (!seen.insert(v).second) return false;
    return true;
}

} // namespace epkit
