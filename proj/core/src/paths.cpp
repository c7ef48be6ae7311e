#include "epkit/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "epkit/errors.hpp"

namespace epkit {

namespace {

// flow[e] is relative to the stored endpoint order: +1 from u to v, -1 back.
bool can_push(const Multigraph& g, const std::map<EdgeId, int>& flow, EdgeId e, VertexId from) {
    auto [a, b] = g.endpoints(e);
    int f = flow.at(e);
    return from == a ? f < 1 : f > -1;
}

void push(const Multigraph& g, std::map<EdgeId, int>& flow, EdgeId e, VertexId from) {
    auto [a, b] = g.endpoints(e);
    flow.at(e) += (from == a) ? 1 : -1;
}

} // namespace

std::pair<int, std::vector<Path>> max_edge_disjoint_paths(const Multigraph& g,
                                                          VertexId u, VertexId v) {
    require(g.has_vertex(u) && g.has_vertex(v), "max_edge_disjoint_paths: missing endpoint");
    require(u != v, "max_edge_disjoint_paths: endpoints must differ");

    std::map<EdgeId, int> flow;
    for (EdgeId e : g.edges())
        if (!g.is_loop(e)) flow[e] = 0;

    int value = 0;
    while (true) {
        // BFS in the residual graph.
        std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
        std::deque<VertexId> queue{u};
        parent[u] = {u, kNoEdge};
        while (!queue.empty() && !parent.count(v)) {
            VertexId cur = queue.front();
            queue.pop_front();
            for (const IncidentEdge& ie : g.incident(cur)) {
                if (ie.other == cur || parent.count(ie.other)) continue;
                if (!can_push(g, flow, ie.edge, cur)) continue;
                parent[ie.other] = {cur, ie.edge};
                queue.push_back(ie.other);
            }
        }
        if (!parent.count(v)) break;
        VertexId cur = v;
        while (cur != u) {
            auto [prev, e] = parent.at(cur);
            push(g, flow, e, prev);
            cur = prev;
        }
        ++value;
    }

    // Strip the flow into `value` edge-disjoint paths.  A walk from u follows
    // outgoing flow (smallest edge id first) and must end in v; stray flow
    // cycles absorbed along the way are cut out when the walk revisits a vertex.
    std::vector<Path> paths;
    for (int i = 0; i < value; ++i) {
        Path p;
        p.verts.push_back(u);
        VertexId cur = u;
        while (cur != v) {
            EdgeId next = kNoEdge;
            for (const IncidentEdge& ie : g.incident(cur)) {
                if (ie.other == cur) continue;
                auto it = flow.find(ie.edge);
                if (it == flow.end() || it->second == 0) continue;
                auto [a, b] = g.endpoints(ie.edge);
                VertexId towards = it->second == 1 ? b : a;
                VertexId source = it->second == 1 ? a : b;
                if (source != cur) continue;
                next = ie.edge;
                cur = towards;
                break;
            }
            ensure(next != kNoEdge, "max_edge_disjoint_paths: flow walk got stuck");
            flow.at(next) = 0;
            auto seen = std::find(p.verts.begin(), p.verts.end(), cur);
            if (seen != p.verts.end()) {
                std::size_t keep = static_cast<std::size_t>(seen - p.verts.begin());
                p.verts.resize(keep + 1);
                p.edges.resize(keep);
            } else {
                p.verts.push_back(cur);
                p.edges.push_back(next);
            }
        }
        ensure(!p.edges.empty(), "max_edge_disjoint_paths: empty path stripped");
        paths.push_back(std::move(p));
    }
    return {value, paths};
}

} // namespace epkit
