#include "epkit/packing.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "epkit/errors.hpp"
#include "epkit/search.hpp"

namespace epkit {

namespace {

int search_cap(const Multigraph& h) {
    return static_cast<int>(std::max<std::size_t>(h.num_vertices(), 2));
}

int neighbors_on(const Multigraph& h, VertexId v, const std::set<VertexId>& cycle_verts) {
    int cnt = 0;
    for (VertexId w : h.neighbors(v)) cnt += cycle_verts.count(w) ? 1 : 0;
    return cnt;
}

// Shared round loop for the checked extractors; cap doubles as the neighbour
// bound and the per-round degree coefficient (floor = rem * cap - offset).
std::vector<Cycle> packing_rounds(const Multigraph& g, int k, int lmin, int cap, int offset) {
    Multigraph h = g;
    std::vector<Cycle> out;
    for (int i = 0; i < k; ++i) {
        auto c = shortest_cycle_geq(h, lmin, search_cap(h));
        ensure(c.has_value(), "cycle packing: no qualifying cycle despite the degree bound");
        std::set<VertexId> cv(c->verts.begin(), c->verts.end());
        for (VertexId v : h.vertices())
            if (!cv.count(v))
                ensure(neighbors_on(h, v, cv) <= cap,
                       "cycle packing: outside vertex has too many neighbours on the cycle");
        out.push_back(*c);
        for (VertexId v : c->verts) h.remove_vertex(v);
        long long floor_now = static_cast<long long>(k - 1 - i) * cap - offset;
        if (floor_now > 0)
            ensure(h.min_degree() >= floor_now,
                   "cycle packing: residual degree dropped below the induction bound");
    }
    return out;
}

} // namespace

std::optional<std::vector<Cycle>> try_cycle_packing(const Multigraph& g, int k, int lmin) {
    require(k >= 0, "try_cycle_packing: negative k");
    require(lmin >= 1, "try_cycle_packing: lmin must be positive");
    Multigraph h = g;
    std::vector<Cycle> out;
    for (int i = 0; i < k; ++i) {
        auto c = shortest_cycle_geq(h, lmin, search_cap(h));
        if (!c) return std::nullopt;
        out.push_back(*c);
        for (VertexId v : c->verts) h.remove_vertex(v);
    }
    return out;
}

std::vector<Cycle> greedy_cycle_packing(const Multigraph& g, int k) {
    require(k >= 0, "greedy_cycle_packing: negative k");
    require(g.is_simple(), "greedy_cycle_packing: loops or parallel edges defeat the degree argument");
    require(g.min_degree() >= 3 * k, "greedy_cycle_packing: min degree below 3k");
    return packing_rounds(g, k, 1, 3, 0);
}

std::vector<Cycle> greedy_long_cycle_packing(const Multigraph& g, int k, int l) {
    require(l >= 3, "greedy_long_cycle_packing: l must be at least 3");
    require(k >= 0, "greedy_long_cycle_packing: negative k");
    require(g.is_simple(),
            "greedy_long_cycle_packing: loops or parallel edges defeat the degree argument");
    require(g.min_degree() >= static_cast<long long>(k) * l - 1,
            "greedy_long_cycle_packing: min degree below kl-1");
    return packing_rounds(g, k, l, l, 1);
}

namespace {

EdgeId edge_between(const Multigraph& g, VertexId a, VertexId b) {
    for (const IncidentEdge& ie : g.incident(a))
        if (ie.other == b) return ie.edge;
    throw invariant_violation("edge_between: vertices are not adjacent");
}

} // namespace

Cycle maximal_path_long_cycle(const Multigraph& g, int l) {
    require(l >= 3, "maximal_path_long_cycle: l must be at least 3");
    require(g.num_vertices() > 0, "maximal_path_long_cycle: empty graph");

    std::vector<VertexId> path{g.vertices().front()};
    std::set<VertexId> on_path{path.front()};
    auto extend = [&](bool at_back) {
        for (;;) {
            VertexId end = at_back ? path.back() : path.front();
            VertexId next = kNoVertex;
            for (VertexId w : g.neighbors(end))
                if (!on_path.count(w)) {
                    next = w;
                    break;
                }
            if (next == kNoVertex) return;
            if (at_back)
                path.push_back(next);
            else
                path.insert(path.begin(), next);
            on_path.insert(next);
        }
    };
    extend(true);
    extend(false);

    // All neighbours of the front vertex now lie on the path; close through
    // the farthest one.
    VertexId u = path.front();
    std::set<VertexId> nu;
    for (VertexId w : g.neighbors(u)) nu.insert(w);
    std::size_t far = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (nu.count(path[i])) far = i;
    // With min degree >= l-1 the farthest neighbour sits at index >= l-1, so
    // a short closure is proof that the degree precondition did not hold.
    require(far + 1 >= static_cast<std::size_t>(l),
            "maximal_path_long_cycle: min degree below l-1 (closing cycle shorter than l)");

    Cycle c;
    for (std::size_t i = 0; i <= far; ++i) {
        c.verts.push_back(path[i]);
        c.edges.push_back(i < far ? edge_between(g, path[i], path[i + 1])
                                  : edge_between(g, path[far], u));
    }
    std::string why;
    bool valid = validate_cycle(g, c, &why);
    ensure(valid, "maximal_path_long_cycle: " + why);
    return c;
}

namespace {

Path reversed(const Path& p) {
    Path r = p;
    std::reverse(r.verts.begin(), r.verts.end());
    std::reverse(r.edges.begin(), r.edges.end());
    return r;
}

} // namespace

Cycle even_cycle_from_theta(const Multigraph& g, const std::vector<Path>& paths) {
    require(paths.size() == 3, "even_cycle_from_theta: need exactly three paths");
    VertexId u = paths[0].front(), v = paths[0].back();
    require(u != v, "even_cycle_from_theta: path endpoints coincide");
    std::set<EdgeId> all_edges;
    std::set<VertexId> interior_seen;
    for (const Path& p : paths) {
        std::string why;
        bool valid = validate_path(g, p, &why);
        require(valid, "even_cycle_from_theta: " + why);
        require((p.front() == u && p.back() == v) || (p.front() == v && p.back() == u),
                "even_cycle_from_theta: paths do not share their endpoints");
        for (EdgeId e : p.edges)
            require(all_edges.insert(e).second, "even_cycle_from_theta: paths share an edge");
        for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) {
            VertexId w = p.verts[i];
            require(w != u && w != v && interior_seen.insert(w).second,
                    "even_cycle_from_theta: paths are not internally disjoint");
        }
    }

    int a = 0, b = 1;
    if ((paths[0].length() + paths[1].length()) % 2 != 0)
        b = (paths[0].length() + paths[2].length()) % 2 == 0 ? 2 : (a = 1, 2);

    Path out = paths[a].front() == u ? paths[a] : reversed(paths[a]);
    Path back = paths[b].front() == v ? paths[b] : reversed(paths[b]);
    Cycle c;
    c.verts = out.verts;
    c.edges = out.edges;
    for (std::size_t i = 1; i + 1 < back.verts.size(); ++i) c.verts.push_back(back.verts[i]);
    c.edges.insert(c.edges.end(), back.edges.begin(), back.edges.end());

    std::string why;
    bool valid = validate_cycle(g, c, &why);
    ensure(valid, "even_cycle_from_theta: " + why);
    ensure(c.length() % 2 == 0, "even_cycle_from_theta: parity pick produced an odd cycle");
    ensure(c.length() == paths[a].length() + paths[b].length(),
           "even_cycle_from_theta: combined length mismatch");
    return c;
}

} // namespace epkit
