#include "epkit/contraction.hpp"

#include <algorithm>
#include <set>

#include "epkit/errors.hpp"
#include "epkit/search.hpp"

namespace epkit {

const std::vector<VertexId>& ContractionMap::preimage(VertexId v) const {
    auto it = vertex_preimages.find(v);
    require(it != vertex_preimages.end(), "preimage: vertex not in map");
    return it->second;
}

EdgeId ContractionMap::original_edge(EdgeId e) const {
    auto it = edge_original.find(e);
    require(it != edge_original.end(), "original_edge: edge not in map");
    return it->second;
}

std::pair<Multigraph, ContractionMap> contract_vertex_set(const Multigraph& g,
                                                          const std::vector<VertexId>& s,
                                                          LoopPolicy policy) {
    require(!s.empty(), "contract_vertex_set: empty set");
    std::set<VertexId> in_s;
    for (VertexId v : s) {
        require(g.has_vertex(v), "contract_vertex_set: vertex does not exist");
        require(in_s.insert(v).second, "contract_vertex_set: repeated vertex");
    }
    {
        std::vector<VertexId> sorted(in_s.begin(), in_s.end());
        Multigraph inside = g.induced_subgraph(sorted);
        require(is_connected(inside), "contract_vertex_set: set is not connected");
    }

    Multigraph h = g;
    VertexId w = h.add_vertex();
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.endpoints(e);
        bool bu = in_s.count(u) > 0, bv = in_s.count(v) > 0;
        if (!bu && !bv) continue;
        if (bu && bv) {
            if (policy == LoopPolicy::discard)
                h.remove_edge(e);
            else
                h.rewire_edge(e, w, w);
        } else {
            h.rewire_edge(e, bu ? w : u, bv ? w : v);
        }
    }
    for (VertexId v : in_s) h.remove_vertex(v);

    ContractionMap map;
    map.vertex_preimages[w] = {in_s.begin(), in_s.end()};
    for (VertexId v : g.vertices())
        if (!in_s.count(v)) map.vertex_preimages[v] = {v};
    for (EdgeId e : h.edges()) map.edge_original[e] = e;
    return {std::move(h), std::move(map)};
}

namespace {

// map(a -> b) after map(orig -> a): preimages union up, edge provenance chains.
ContractionMap compose(const ContractionMap& first, const ContractionMap& second) {
    ContractionMap out;
    for (const auto& [v, mid] : second.vertex_preimages) {
        std::set<VertexId> acc;
        for (VertexId x : mid) {
            const auto& pre = first.preimage(x);
            acc.insert(pre.begin(), pre.end());
        }
        out.vertex_preimages[v] = {acc.begin(), acc.end()};
    }
    for (const auto& [e, mid] : second.edge_original)
        out.edge_original[e] = first.original_edge(mid);
    return out;
}

ContractionMap identity_map(const Multigraph& g) {
    ContractionMap map;
    for (VertexId v : g.vertices()) map.vertex_preimages[v] = {v};
    for (EdgeId e : g.edges()) map.edge_original[e] = e;
    return map;
}

} // namespace

std::pair<Multigraph, ContractionMap> quotient_simple(const Multigraph& g,
                                                      const std::vector<std::vector<VertexId>>& parts) {
    std::set<VertexId> covered;
    std::size_t total = 0;
    for (const auto& part : parts) {
        require(!part.empty(), "quotient_simple: empty part");
        total += part.size();
        covered.insert(part.begin(), part.end());
    }
    require(total == covered.size() && covered.size() == g.num_vertices(),
            "quotient_simple: parts do not partition the vertex set");

    Multigraph h = g;
    ContractionMap map = identity_map(g);
    for (const auto& part : parts) {
        if (part.size() == 1) continue;
        auto [next, step] = contract_vertex_set(h, part, LoopPolicy::discard);
        // Contracting leaves singleton preimages alone, so later parts still
        // name existing vertices.
        map = compose(map, step);
        h = std::move(next);
    }
    // Keep the smallest edge id of every parallel bundle.
    std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
    for (EdgeId e : h.edges()) {
        auto [u, v] = h.endpoints(e);
        auto key = std::minmax(u, v);
        if (!seen.emplace(std::make_pair(key.first, key.second), e).second) {
            h.remove_edge(e);
            map.edge_original.erase(e);
        }
    }
    return {std::move(h), std::move(map)};
}

void check_contraction_map(const Multigraph& original, const Multigraph& contracted,
                           const ContractionMap& map) {
    std::set<VertexId> covered;
    for (VertexId v : contracted.vertices()) {
        const auto& pre = map.preimage(v);
        ensure(!pre.empty(), "contraction map: empty preimage");
        for (VertexId x : pre) {
            ensure(original.has_vertex(x), "contraction map: preimage vertex missing");
            ensure(covered.insert(x).second, "contraction map: overlapping preimages");
        }
    }
    ensure(covered.size() == original.num_vertices(),
           "contraction map: preimages do not cover the original vertices");
    ensure(map.vertex_preimages.size() == contracted.num_vertices(),
           "contraction map: vertex map size mismatch");

    std::set<EdgeId> used;
    for (EdgeId e : contracted.edges()) {
        EdgeId oe = map.original_edge(e);
        ensure(original.has_edge(oe), "contraction map: original edge missing");
        ensure(used.insert(oe).second, "contraction map: edge provenance not injective");
        auto [a, b] = contracted.endpoints(e);
        auto [x, y] = original.endpoints(oe);
        auto contains = [&](VertexId part, VertexId orig) {
            const auto& pre = map.preimage(part);
            return std::binary_search(pre.begin(), pre.end(), orig);
        };
        bool straight = contains(a, x) && contains(b, y);
        bool swapped = contains(a, y) && contains(b, x);
        ensure(straight || swapped, "contraction map: edge endpoints inconsistent");
    }
}

Cycle lift_cycle(const Multigraph& original, const ContractionMap& map, const Cycle& c) {
    require(!c.edges.empty(), "lift_cycle: empty cycle");
    std::size_t len = c.edges.size();
    Cycle out;
    if (len == 1) {
        // A loop either was a loop already or stands for an edge inside one
        // part; the latter lifts to that edge plus a path around it.
        EdgeId oe = map.original_edge(c.edges[0]);
        auto [x, y] = original.endpoints(oe);
        const auto& pre = map.preimage(c.verts[0]);
        require(std::binary_search(pre.begin(), pre.end(), x) &&
                    std::binary_search(pre.begin(), pre.end(), y),
                "lift_cycle: loop edge does not sit inside the part");
        if (x == y) return Cycle{{x}, {oe}};
        std::vector<VertexId> sorted(pre.begin(), pre.end());
        Multigraph inside = original.induced_subgraph(sorted);
        inside.remove_edge(oe);
        auto walk = bfs_shortest_path(inside, y, x);
        require(walk.has_value(), "lift_cycle: loop has no original cycle behind it");
        out.verts.push_back(x);
        out.edges.push_back(oe);
        for (std::size_t j = 0; j + 1 < walk->verts.size(); ++j) {
            out.verts.push_back(walk->verts[j]);
            out.edges.push_back(walk->edges[j]);
        }
        std::string why1;
        bool valid = validate_cycle(original, out, &why1);
        ensure(valid, "lift_cycle: lifted loop invalid: " + why1);
        return out;
    }
    for (std::size_t i = 0; i < len; ++i) {
        VertexId part = c.verts[i];
        EdgeId in_orig = map.original_edge(c.edges[(i + len - 1) % len]);
        EdgeId out_orig = map.original_edge(c.edges[i]);
        const auto& pre = map.preimage(part);
        auto pick_end = [&](EdgeId e) {
            auto [x, y] = original.endpoints(e);
            bool bx = std::binary_search(pre.begin(), pre.end(), x);
            bool by = std::binary_search(pre.begin(), pre.end(), y);
            require(bx || by, "lift_cycle: edge does not touch the part");
            ensure(!(bx && by), "lift_cycle: certificate edge inside one part");
            return bx ? x : y;
        };
        VertexId enter = pick_end(in_orig);
        VertexId leave = pick_end(out_orig);
        if (enter == leave) {
            out.verts.push_back(enter);
        } else {
            std::vector<VertexId> sorted(pre.begin(), pre.end());
            Multigraph inside = original.induced_subgraph(sorted);
            auto walk = bfs_shortest_path(inside, enter, leave);
            ensure(walk.has_value(), "lift_cycle: part is not connected");
            for (std::size_t j = 0; j + 1 < walk->verts.size(); ++j) {
                out.verts.push_back(walk->verts[j]);
                out.edges.push_back(walk->edges[j]);
            }
            out.verts.push_back(walk->verts.back());
        }
        out.edges.push_back(out_orig);
    }
    std::string why;
    bool valid = validate_cycle(original, out, &why);
    ensure(valid, "lift_cycle: lifted cycle invalid: " + why);
    ensure(out.length() >= c.length(), "lift_cycle: lift shortened the cycle");
    return out;
}

} // namespace epkit
