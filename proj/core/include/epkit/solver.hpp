#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epkit/contraction.hpp"
#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Hitting-set bound for long cycles: g(k, l) = 8(l-1)(ceil(log2(k*l)) + 1)
 * and g(0, l) = 0.  Always divisible by 8, so the ball radius g/8 and the
 * separation g/4 used by the solver are integers.
 */
int g_long(int k, int l);

/**
 * Proof object for the long-cycle duality on a multigraph: either k pairwise
 * edge-disjoint cycles of length >= l, or an edge set F with
 * |F| <= k*g(k,l) whose removal leaves no cycle of length >= l.
 * provenance records the chain of reductions that produced the result, one
 * line per step, outermost first.
 */
struct Certificate {
    int k = 0;
    int l = 0;
    long long bound = 0;
    bool is_packing = false;
    std::vector<Cycle> cycles;   // packing branch, exactly k cycles
    std::vector<EdgeId> hitting; // hitting branch, sorted, no duplicates
    std::vector<std::string> provenance;
};

enum class ReductionKind {
    short_long_cycle, // R1: long cycle of length <= g(k,l); delete its edges
    low_degree,       // R2: vertex of degree <= 1; delete it
    leaf_block,       // R3: leaf-block without a long cycle; contract it
    two_blocks,       // R4: two 2-cut blocks sharing a sealed cut vertex; contract one
};

/**
 * One applicable reduction step; only the fields of the tagged kind are
 * meaningful.  For two_blocks the roles are normalized so that p1 <= p2 and
 * the solver contracts T2: `cut` is the shared cut vertex, t1/t2 are the
 * other cut vertices of the two blocks, and p1/p2 count the maximum
 * edge-disjoint t_i--cut paths inside T_i.
 */
struct Reduction {
    ReductionKind kind = ReductionKind::short_long_cycle;

    Cycle cycle;                       // R1
    VertexId vertex = kNoVertex;       // R2
    std::vector<VertexId> block_verts; // R3
    std::vector<EdgeId> block_edges;   // R3

    VertexId center = kNoVertex;                // R4: ball center x
    std::vector<VertexId> t1_verts, t2_verts;   // R4: the two blocks
    std::vector<EdgeId> t1_edges, t2_edges;
    VertexId cut = kNoVertex, t1 = kNoVertex, t2 = kNoVertex;
    int p1 = 0, p2 = 0;
};

/**
 * First applicable reduction in the fixed priority R1 > R2 > R3 > R4, or
 * absent.  R4 detection builds the ball decomposition (separation g/4,
 * radius r = g/8) and scans block pairs of each part; a pair qualifies when
 * both blocks meet B_{r-l}(x), share exactly one cut vertex of the part
 * whose graph neighbours all lie inside the two blocks, both carry exactly
 * two cut vertices of the part, and no vertex of either block other than
 * its two cut vertices has an edge leaving the block.
 */
std::optional<Reduction> find_reduction(const Multigraph& g, int k, int l);

/**
 * Maps an edge-disjoint packing of G* (G with T2 contracted to one vertex)
 * back to G, given the two_blocks reduction behind the contraction.  Cycles
 * avoiding the contracted vertex pass through unchanged; cycles visiting it
 * with both attachments at one vertex reattach there (for a sealed block
 * that vertex is t2); cycles crossing from `cut` to t2 are closed with a
 * distinct member of a precomputed family of edge-disjoint cut--t2 paths
 * inside T2.  Output lengths never drop below input lengths, and the output
 * is edge-disjoint.  Throws invariant_violation when more cycles cross than
 * there are paths; the reduction's counting rules that out.
 */
std::vector<Cycle> sigma_lift(const Multigraph& g, const Reduction& r,
                              const ContractionMap& map, const std::vector<Cycle>& packing);

/**
 * Expands pairwise vertex-disjoint cycles of a contracted quotient back into
 * G: every visit to a part vertex becomes a shortest path inside that part
 * between the two attachment endpoints.  Outputs are pairwise edge-disjoint
 * cycles of G, each at least as long as its preimage.
 */
std::vector<Cycle> lift_ball_packing(const Multigraph& g, const ContractionMap& map,
                                     const std::vector<Cycle>& packing);

/**
 * Decides the long-cycle alternative for (k, l): a packing of k
 * edge-disjoint cycles of length >= l, or a hitting set of at most k*g(k,l)
 * edges.  Loops are discarded on entry (a loop is never long for l >= 2).
 *
 * The driver applies find_reduction until nothing fits, reports Hitting({})
 * when the residual graph provably has no long cycle (checked exactly only
 * while |E| <= exact_check_budget), and otherwise contracts the ball
 * decomposition and packs greedily in the quotient, lifting the cycles back.
 *
 * Throws theorem_gap when a guarantee that is promised for fully reduced
 * graphs fails on this instance; the failed check is named instead of
 * guessing a certificate.
 */
Certificate solve_long(const Multigraph& g, int k, int l, int exact_check_budget = 64);

} // namespace epkit
