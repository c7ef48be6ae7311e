#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace epkit {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct IncidentEdge {
    EdgeId edge;
    VertexId other; // equals the owning vertex for a loop
};

/**
 * Undirected multigraph with stable ids.  Parallel edges and loops are
 * first-class; ids are never reused after deletion within one graph lineage.
 * All listing accessors return ids in ascending order so every algorithm
 * built on top is deterministic.
 */
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t n) { for (std::size_t i = 0; i < n; ++i) add_vertex(); }

    VertexId add_vertex();
    // Both endpoints must exist.  u == v creates a loop.
    EdgeId add_edge(VertexId u, VertexId v);

    void remove_edge(EdgeId e);
    // Removes v together with all incident edges.
    void remove_vertex(VertexId v);

    bool has_vertex(VertexId v) const { return v < vertex_alive_.size() && vertex_alive_[v]; }
    bool has_edge(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    VertexId other_end(EdgeId e, VertexId v) const;
    bool is_loop(EdgeId e) const;

    std::size_t num_vertices() const { return n_alive_; }
    std::size_t num_edges() const { return m_alive_; }

    // Loop edges contribute 2.
    int degree(VertexId v) const;

    std::vector<VertexId> vertices() const; // ascending
    std::vector<EdgeId> edges() const;      // ascending

    // Incident edges sorted by edge id; a loop appears once.
    const std::vector<IncidentEdge>& incident(VertexId v) const;

    // Distinct adjacent vertices, ascending, self excluded.
    std::vector<VertexId> neighbors(VertexId v) const;

    // Subgraph induced on `verts`; vertex and edge ids are preserved.
    Multigraph induced_subgraph(std::span<const VertexId> verts) const;

    // Copy without loop edges (ids preserved).
    Multigraph without_loops() const;

    // Moves an existing edge to new endpoints, keeping its id.  This is the
    // low-level primitive behind contraction; adjacency stays sorted.
    void rewire_edge(EdgeId e, VertexId nu, VertexId nv);

    int min_degree() const; // 0 for an empty graph

    // True when the graph has neither loops nor parallel edges.
    bool is_simple() const;

    VertexId max_vertex_id_bound() const { return static_cast<VertexId>(vertex_alive_.size()); }
    EdgeId max_edge_id_bound() const { return static_cast<EdgeId>(edges_.size()); }

private:
    struct EdgeRec {
        VertexId u = kNoVertex;
        VertexId v = kNoVertex;
        bool alive = false;
    };

    std::vector<bool> vertex_alive_;
    std::vector<std::vector<IncidentEdge>> adj_;
    std::vector<EdgeRec> edges_;
    std::size_t n_alive_ = 0;
    std::size_t m_alive_ = 0;
};

} // namespace epkit
