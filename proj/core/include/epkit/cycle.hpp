#pragma once

#include <string>
#include <vector>

#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * A cycle as a closed alternating sequence: edge i joins verts[i] and
 * verts[(i+1) % length].  Length conventions: a loop is a cycle of length 1,
 * two parallel edges form a cycle of length 2, and vertices must be pairwise
 * distinct whenever length >= 3.  Edges are pairwise distinct always.
 */
struct Cycle {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    bool operator==(const Cycle&) const = default;
};

// Same path shape but open: edges.size() + 1 == verts.size().
struct Path {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    VertexId front() const { return verts.front(); }
    VertexId back() const { return verts.back(); }
};

// Checks the cycle against g; on failure returns false and, when `why` is
// non-null, stores the first violated condition.
bool validate_cycle(const Multigraph& g, const Cycle& c, std::string* why = nullptr);

bool validate_path(const Multigraph& g, const Path& p, std::string* why = nullptr);

// Lexicographically smallest edge-id sequence over all rotations and both
// directions.  Cycles compare equal iff they are the same cyclic object.
std::vector<EdgeId> canonical_edge_key(const Cycle& c);

// Rebuilds a cycle from an ordered edge-id list (as stored in certificate
// files).  Throws precondition_error when the list does not close up.
Cycle cycle_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges);

bool cycles_edge_disjoint(const std::vector<Cycle>& cs);
bool cycles_vertex_disjoint(const std::vector<Cycle>& cs);

} // namespace epkit
