#include "epkit/classic.hpp"

#include <algorithm>

#include "epkit/contraction.hpp"
#include "epkit/decomposition.hpp"
#include "epkit/errors.hpp"
#include "epkit/packing.hpp"
#include "epkit/search.hpp"

namespace epkit {

int g_classic(int k) {
    require(k >= 0, "g_classic: k must be nonnegative");
    if (k == 0) return 0;
    int t = 0;
    while ((1 << t) < k) ++t; // ceil(log2 k)
    return 8 * t + 2;
}

namespace {

ClassicCertificate empty_packing(int k, ClassicMode mode) {
    ClassicCertificate cert;
    cert.mode = mode;
    cert.k = k;
    cert.bound = static_cast<long long>(k) * g_classic(k);
    cert.is_packing = true;
    return cert;
}

ClassicCertificate empty_hitting(int k, ClassicMode mode) {
    ClassicCertificate cert;
    cert.mode = mode;
    cert.k = k;
    cert.bound = static_cast<long long>(k) * g_classic(k);
    cert.is_packing = false;
    return cert;
}

void check_hitting_size(const ClassicCertificate& cert) {
    std::size_t size = cert.mode == ClassicMode::vertex ? cert.hit_vertices.size()
                                                        : cert.hit_edges.size();
    ensure(static_cast<long long>(size) <= cert.bound,
           "solve_classic: hitting set exceeds k*g(k)");
}

EdgeId edge_between(const Multigraph& g, VertexId a, VertexId b) {
    for (const auto& ie : g.incident(a))
        if (ie.other == b) return ie.edge;
    throw invariant_violation("solve_classic: expected an edge between two vertices");
}

// The one merged vertex of a single-set contraction.
VertexId merged_vertex(const ContractionMap& map) {
    for (const auto& [v, pre] : map.vertex_preimages)
        if (pre.size() > 1) return v;
    throw invariant_violation("solve_classic: contraction map has no merged vertex");
}

ClassicCertificate solve_impl(const Multigraph& g, int k, ClassicMode mode) {
    if (k == 0) return empty_packing(0, mode);
    if (is_acyclic(g)) return empty_hitting(k, mode);

    const int gk = g_classic(k);
    const long long bound = static_cast<long long>(k) * gk;

    // Short cycle: move it into the certificate and recurse with k - 1.
    auto gw = girth(g);
    ensure(gw.has_value(), "solve_classic: cyclic graph without a shortest cycle");
    if (gw->first <= gk) {
        const Cycle& c = gw->second;
        Multigraph h = g;
        if (mode == ClassicMode::vertex) {
            for (VertexId v : c.verts) h.remove_vertex(v);
        } else {
            for (EdgeId e : c.edges) h.remove_edge(e);
        }
        ensure(static_cast<long long>(k - 1) * g_classic(k - 1) + gk <= bound,
               "solve_classic: bound is not monotone under peeling");
        ClassicCertificate rec = solve_impl(h, k - 1, mode);
        rec.k = k;
        rec.bound = bound;
        if (rec.is_packing) {
            rec.cycles.insert(rec.cycles.begin(), c);
        } else if (mode == ClassicMode::vertex) {
            rec.hit_vertices.insert(rec.hit_vertices.end(), c.verts.begin(), c.verts.end());
            std::sort(rec.hit_vertices.begin(), rec.hit_vertices.end());
            check_hitting_size(rec);
        } else {
            rec.hit_edges.insert(rec.hit_edges.end(), c.edges.begin(), c.edges.end());
            std::sort(rec.hit_edges.begin(), rec.hit_edges.end());
            check_hitting_size(rec);
        }
        return rec;
    }

    // The whole graph fits inside the bound: hit everything.
    std::size_t total = mode == ClassicMode::vertex ? g.num_vertices() : g.num_edges();
    if (bound >= static_cast<long long>(total)) {
        ClassicCertificate cert = empty_hitting(k, mode);
        if (mode == ClassicMode::vertex) cert.hit_vertices = g.vertices();
        else cert.hit_edges = g.edges();
        cert.trivial_bound = true;
        return cert;
    }

    // Vertices of degree <= 1 lie on no cycle; certificates transfer as-is.
    {
        Multigraph h = g;
        bool shrunk = false;
        for (bool again = true; again;) {
            again = false;
            for (VertexId v : h.vertices()) {
                if (h.degree(v) <= 1) {
                    h.remove_vertex(v);
                    shrunk = true;
                    again = true;
                }
            }
        }
        if (shrunk) {
            ClassicCertificate rec = solve_impl(h, k, mode);
            rec.k = k;
            rec.bound = bound;
            return rec;
        }
    }

    // Suppress a degree 2 vertex by contracting its smallest incident edge.
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 2) continue;
        auto nb = g.neighbors(v);
        ensure(nb.size() == 2, "solve_classic: degree 2 vertex with a parallel pair or loop");
        VertexId a = nb[0], b = nb[1];
        auto bn = g.neighbors(a);
        if (std::binary_search(bn.begin(), bn.end(), b)) {
            // Triangle a-v-b.  Girth > g(k) >= 10 rules this out for k >= 2,
            // so the one remaining cycle to find is this triangle itself.
            ensure(k == 1, "solve_classic: triangle survived the short-cycle step");
            Cycle tri;
            tri.verts = {v, a, b};
            tri.edges = {edge_between(g, v, a), edge_between(g, a, b), edge_between(g, b, v)};
            ensure(validate_cycle(g, tri), "solve_classic: malformed triangle");
            ClassicCertificate cert = empty_packing(1, mode);
            cert.cycles = {tri};
            return cert;
        }
        VertexId partner = g.incident(v).front().other;
        auto [h, map] = contract_vertex_set(g, {v, partner}, LoopPolicy::discard);
        // a and b are non-adjacent and v has no other neighbor, so the
        // contraction cannot create a parallel pair.
        ensure(h.is_simple(), "solve_classic: suppression produced a parallel pair");
        ClassicCertificate rec = solve_impl(h, k, mode);
        rec.k = k;
        rec.bound = bound;
        if (rec.is_packing) {
            for (Cycle& c : rec.cycles) c = lift_cycle(g, map, c);
            ensure(mode == ClassicMode::vertex ? cycles_vertex_disjoint(rec.cycles)
                                               : cycles_edge_disjoint(rec.cycles),
                   "solve_classic: lifted cycles are not disjoint");
        } else if (mode == ClassicMode::vertex) {
            // A cycle through the suppressed vertex also passes its partner,
            // so replacing the merged vertex by the partner keeps every cycle
            // covered.
            VertexId w = merged_vertex(map);
            for (VertexId& x : rec.hit_vertices)
                if (x == w) x = partner;
            std::sort(rec.hit_vertices.begin(), rec.hit_vertices.end());
        }
        // Edge mode hitting: surviving edges keep their ids, nothing to lift.
        return rec;
    }

    // Min degree >= 3 and girth > g(k) = 8m + 2: contract balls of radius m
    // to push the min degree up to 3 * 2^m >= 3k, where greedy packing wins.
    ensure(g.min_degree() >= 3, "solve_classic: reductions left a low degree vertex");
    const int m = (gk - 2) / 8;
    try {
        auto [minor, map] = ko_minor(g, m);
        long long want = 3LL << m;
        if (minor.min_degree() < want)
            throw theorem_gap("solve_classic: ball contraction missed min degree 3*2^m");
        if (want < 3LL * k)
            throw theorem_gap("solve_classic: 3*2^m < 3k despite m = ceil(log2 k)");
        std::vector<Cycle> cycles = greedy_cycle_packing(minor, k);
        ClassicCertificate cert = empty_packing(k, mode);
        for (const Cycle& c : cycles) cert.cycles.push_back(lift_cycle(g, map, c));
        ensure(cycles_vertex_disjoint(cert.cycles),
               "solve_classic: lifted ball packing is not vertex-disjoint");
        return cert;
    } catch (const invariant_violation& ex) {
        // A failed guarantee of the contraction lemma on a fully reduced
        // graph, not a caller error: report it as a gap.
        throw theorem_gap(std::string("solve_classic: ") + ex.what());
    }
}

} // namespace

ClassicCertificate solve_classic(const Multigraph& g, int k, ClassicMode mode) {
    require(k >= 0, "solve_classic: k must be nonnegative");
    require(g.is_simple(),
            "classic solver requires simple graph (use solve_long with l = 3 for multigraphs)");
    ClassicCertificate cert = solve_impl(g, k, mode);
    if (cert.is_packing && k > 0)
        ensure(cert.cycles.size() == static_cast<std::size_t>(k),
               "solve_classic: packing has the wrong number of cycles");
    return cert;
}

} // namespace epkit
