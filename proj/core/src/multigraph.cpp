#include "epkit/multigraph.hpp"

#include <algorithm>
#include <set>

#include "epkit/errors.hpp"

namespace epkit {

VertexId Multigraph::add_vertex() {
    VertexId id = static_cast<VertexId>(vertex_alive_.size());
    vertex_alive_.push_back(true);
    adj_.emplace_back();
    ++n_alive_;
    return id;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    require(has_vertex(u) && has_vertex(v), "add_edge: endpoint does not exist");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, true});
    adj_[u].push_back({id, v});
    if (u != v) adj_[v].push_back({id, u});
    ++m_alive_;
    return id;
}

void Multigraph::remove_edge(EdgeId e) {
    require(has_edge(e), "remove_edge: no such edge");
    const EdgeRec& rec = edges_[e];
    auto drop = [e](std::vector<IncidentEdge>& list) {
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [e](const IncidentEdge& ie) { return ie.edge == e; }),
                   list.end());
    };
    drop(adj_[rec.u]);
    if (rec.v != rec.u) drop(adj_[rec.v]);
    edges_[e].alive = false;
    --m_alive_;
}

void Multigraph::remove_vertex(VertexId v) {
    require(has_vertex(v), "remove_vertex: no such vertex");
    std::vector<EdgeId> incident_ids;
    for (const IncidentEdge& ie : adj_[v]) incident_ids.push_back(ie.edge);
    std::sort(incident_ids.begin(), incident_ids.end());
    incident_ids.erase(std::unique(incident_ids.begin(), incident_ids.end()), incident_ids.end());
    for (EdgeId e : incident_ids) remove_edge(e);
    vertex_alive_[v] = false;
    --n_alive_;
}

std::pair<VertexId, VertexId> Multigraph::endpoints(EdgeId e) const {
    require(has_edge(e), "endpoints: no such edge");
    return {edges_[e].u, edges_[e].v};
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    require(a == v || b == v, "other_end: vertex not an endpoint");
    return a == v ? b : a;
}

bool Multigraph::is_loop(EdgeId e) const {
    auto [a, b] = endpoints(e);
    return a == b;
}

int Multigraph::degree(VertexId v) const {
    require(has_vertex(v), "degree: no such vertex");
    int d = 0;
    for (const IncidentEdge& ie : adj_[v]) d += (ie.other == v) ? 2 : 1;
    return d;
}

std::vector<VertexId> Multigraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (VertexId v = 0; v < vertex_alive_.size(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeId> Multigraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(m_alive_);
    for (EdgeId e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

const std::vector<IncidentEdge>& Multigraph::incident(VertexId v) const {
    require(has_vertex(v), "incident: no such vertex");
    return adj_[v];
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
    require(has_vertex(v), "neighbors: no such vertex");
    std::set<VertexId> seen;
    for (const IncidentEdge& ie : adj_[v])
        if (ie.other != v) seen.insert(ie.other);
    return {seen.begin(), seen.end()};
}

Multigraph Multigraph::induced_subgraph(std::span<const VertexId> verts) const {
    Multigraph sub;
    sub.vertex_alive_.assign(vertex_alive_.size(), false);
    sub.adj_.resize(adj_.size());
    sub.edges_.resize(edges_.size());
    for (VertexId v : verts) {
        require(has_vertex(v), "induced_subgraph: no such vertex");
        if (!sub.vertex_alive_[v]) {
            sub.vertex_alive_[v] = true;
            ++sub.n_alive_;
        }
    }
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const EdgeRec& rec = edges_[e];
        if (!rec.alive) continue;
        if (!sub.vertex_alive_[rec.u] || !sub.vertex_alive_[rec.v]) continue;
        sub.edges_[e] = rec;
        sub.adj_[rec.u].push_back({e, rec.v});
        if (rec.u != rec.v) sub.adj_[rec.v].push_back({e, rec.u});
        ++sub.m_alive_;
    }
    return sub;
}

Multigraph Multigraph::without_loops() const {
    Multigraph g = *this;
    for (EdgeId e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive && edges_[e].u == edges_[e].v) g.remove_edge(e);
    return g;
}

void Multigraph::rewire_edge(EdgeId e, VertexId nu, VertexId nv) {
    require(has_edge(e), "rewire_edge: no such edge");
    require(has_vertex(nu) && has_vertex(nv), "rewire_edge: endpoint does not exist");
    const EdgeRec old = edges_[e];
    auto drop = [e](std::vector<IncidentEdge>& list) {
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [e](const IncidentEdge& ie) { return ie.edge == e; }),
                   list.end());
    };
    drop(adj_[old.u]);
    if (old.v != old.u) drop(adj_[old.v]);
    edges_[e].u = nu;
    edges_[e].v = nv;
    auto insert_sorted = [e](std::vector<IncidentEdge>& list, VertexId other) {
        auto pos = std::lower_bound(list.begin(), list.end(), e,
                                    [](const IncidentEdge& ie, EdgeId id) { return ie.edge < id; });
        list.insert(pos, {e, other});
    };
    insert_sorted(adj_[nu], nv);
    if (nu != nv) insert_sorted(adj_[nv], nu);
}

int Multigraph::min_degree() const {
    int best = -1;
    for (VertexId v = 0; v < vertex_alive_.size(); ++v) {
        if (!vertex_alive_[v]) continue;
        int d = degree(v);
        if (best < 0 || d < best) best = d;
    }
    return best < 0 ? 0 : best;
}

bool Multigraph::is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (!edges_[e].alive) continue;
        auto [u, v] = endpoints(e);
        if (u == v || !seen.insert(std::minmax(u, v)).second) return false;
    }
    return true;
}

} // namespace epkit
