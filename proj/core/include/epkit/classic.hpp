#pragma once

#include <vector>

#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Hitting-set bound for the classic cycle packing/covering duality:
 * g(0) = 0 and g(k) = 8*ceil(log2(k)) + 2 for k >= 1.
 *
 * Any simple graph either contains k disjoint cycles or a set of at most
 * k*g(k) vertices (edges) meeting every cycle.
 */
int g_classic(int k);

/// Which notion of disjointness the certificate is about.
enum class ClassicMode { vertex, edge };

/**
 * Proof object produced by solve_classic. Exactly one of the two branches
 * is populated:
 *
 *  - a packing: k cycles, pairwise vertex-disjoint (vertex mode) or
 *    edge-disjoint (edge mode), or
 *  - a hitting set: vertices (vertex mode) or edges (edge mode) whose
 *    removal leaves the graph acyclic, of size at most bound = k*g(k).
 *
 * trivial_bound marks hitting sets obtained by taking the whole vertex or
 * edge set when the graph is smaller than the bound.
 */
struct ClassicCertificate {
    ClassicMode mode = ClassicMode::vertex;
    int k = 0;
    long long bound = 0;
    bool is_packing = false;
    std::vector<Cycle> cycles;            // packing branch, k cycles
    std::vector<VertexId> hit_vertices;   // hitting branch, vertex mode, sorted
    std::vector<EdgeId> hit_edges;        // hitting branch, edge mode, sorted
    bool trivial_bound = false;
};

/**
 * Decide the classic Erdos-Posa alternative for k cycles on a simple graph.
 *
 * The algorithm peels short cycles (girth <= g(k)) into the certificate,
 * reduces by deleting degree <= 1 vertices and suppressing degree 2
 * vertices, and on a graph of min degree >= 3 and girth > g(k) contracts a
 * ball packing to reach min degree >= 3k, where greedy packing succeeds.
 *
 * Preconditions: k >= 0 and g simple (loops or parallel edges are rejected
 * with precondition_error; run the long solver with l = 3 on multigraphs
 * in edge mode instead).
 *
 * Throws theorem_gap if an internal degree guarantee fails; no such input
 * is known.
 */
ClassicCertificate solve_classic(const Multigraph& g, int k, ClassicMode mode);

}  // namespace epkit
