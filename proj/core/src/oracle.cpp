#include "epkit/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <functional>
#include <string>

#include "epkit/errors.hpp"
#include "epkit/search.hpp"

namespace epkit {

namespace {

// Widest edge set the branch-and-bound masks can hold; raising
// EPKIT_BUDGET_EDGES beyond this still caps nu/tau instances here.
constexpr int kMaskWidth = 256;
using EdgeMask = std::bitset<kMaskWidth>;

std::string edge_count_note(const Multigraph& g, const OracleBudget& budget) {
    return "unverifiable at this scale: " + std::to_string(g.num_edges()) +
           " edges exceed the budget of " + std::to_string(budget.max_edges);
}

/**
 * Exhaustive enumeration of cycles with length in [lo, hi], each exactly
 * once.  Anchored at the smallest cycle vertex; loops are emitted directly at
 * their vertex and everything longer is emitted in the direction whose first
 * edge id is smaller than its last.  Deliberately independent of the walk
 * enumeration in search.cpp so the two can cross-check each other.
 */
class CycleScan {
  public:
    CycleScan(const Multigraph& g, int lo, int hi, long long max_steps)
        : g_(g),
          lo_(lo),
          hi_(hi),
          steps_(max_steps),
          on_path_(g.max_vertex_id_bound(), 0),
          used_(g.max_edge_id_bound(), 0) {}

    // cb returns false to stop the scan early (the scan is then incomplete
    // but not exceeded).  Returns true when the scan ran to completion.
    bool run(const std::function<bool(const Cycle&)>& cb) {
        emit_ = &cb;
        if (lo_ > hi_) return true;
        for (VertexId s : g_.vertices()) {
            if (stopped_ || exceeded_) break;
            anchor_ = s;
            if (lo_ <= 1) {
                for (const IncidentEdge& ie : g_.incident(s)) {
                    if (ie.other != s) continue;
                    if (!tick()) break;
                    Cycle c;
                    c.verts = {s};
                    c.edges = {ie.edge};
                    if (!(*emit_)(c)) {
                        stopped_ = true;
                        break;
                    }
                }
                if (stopped_ || exceeded_) break;
            }
            path_verts_ = {s};
            path_edges_.clear();
            on_path_[s] = 1;
            extend(s);
            on_path_[s] = 0;
        }
        return !stopped_ && !exceeded_;
    }

    bool exceeded() const { return exceeded_; }

  private:
    bool tick() {
        if (steps_-- <= 0) exceeded_ = true;
        return !exceeded_;
    }

    void extend(VertexId u) {
        for (const IncidentEdge& ie : g_.incident(u)) {
            if (stopped_ || exceeded_) return;
            if (!tick()) return;
            if (used_[ie.edge] || ie.other == u) continue;
            if (ie.other == anchor_) {
                int len = static_cast<int>(path_edges_.size()) + 1;
                if (len >= lo_ && len <= hi_ && path_edges_.front() < ie.edge) {
                    Cycle c;
                    c.verts = path_verts_;
                    c.edges = path_edges_;
                    c.edges.push_back(ie.edge);
                    if (!(*emit_)(c)) {
                        stopped_ = true;
                        return;
                    }
                }
                continue;
            }
            if (ie.other < anchor_ || on_path_[ie.other]) continue;
            if (static_cast<int>(path_edges_.size()) + 1 >= hi_) continue;
            used_[ie.edge] = 1;
            on_path_[ie.other] = 1;
            path_verts_.push_back(ie.other);
            path_edges_.push_back(ie.edge);
            extend(ie.other);
            path_verts_.pop_back();
            path_edges_.pop_back();
            used_[ie.edge] = 0;
            on_path_[ie.other] = 0;
        }
    }

    const Multigraph& g_;
    int lo_, hi_;
    long long steps_;
    bool exceeded_ = false;
    bool stopped_ = false;
    std::vector<char> on_path_, used_;
    std::vector<VertexId> path_verts_;
    std::vector<EdgeId> path_edges_;
    VertexId anchor_ = 0;
    const std::function<bool(const Cycle&)>* emit_ = nullptr;
};

int longest_possible_cycle(const Multigraph& g) {
    // A cycle visits pairwise distinct vertices, so n bounds its length.
    return static_cast<int>(g.num_vertices());
}

bool cycle_edge_order(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges < b.edges;
}

struct IndexedFamily {
    std::vector<Cycle> cycles;       // sorted by (length, edge ids)
    std::vector<EdgeMask> masks;     // over dense edge indices
    std::vector<int> edge_index;     // edge id -> dense index
    std::vector<EdgeId> index_edge;  // dense index -> edge id
};

IndexedFamily index_family(const Multigraph& g, std::vector<Cycle> cycles) {
    IndexedFamily f;
    f.edge_index.assign(g.max_edge_id_bound(), -1);
    for (EdgeId e : g.edges()) {
        f.edge_index[e] = static_cast<int>(f.index_edge.size());
        f.index_edge.push_back(e);
    }
    std::sort(cycles.begin(), cycles.end(), cycle_edge_order);
    f.cycles = std::move(cycles);
    f.masks.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles) {
        EdgeMask m;
        for (EdgeId e : c.edges) m.set(f.edge_index[e]);
        f.masks.push_back(m);
    }
    return f;
}

// Maximum edge-disjoint subfamily via ordered inclusion with two pruning
// bounds: free edges and free degree slots, both divided by the shortest
// family length.
class PackingSearch {
  public:
    PackingSearch(const Multigraph& g, const IndexedFamily& f, long long max_steps)
        : f_(f), steps_(max_steps), free_deg_(g.max_vertex_id_bound(), 0) {
        for (VertexId v : g.vertices()) free_deg_[v] = static_cast<int>(g.degree(v));
        free_edges_ = static_cast<int>(g.num_edges());
        for (VertexId v : g.vertices()) slot_sum_ += free_deg_[v] / 2;
        lmin_ = f_.cycles.empty() ? 1 : static_cast<int>(f_.cycles.front().length());
    }

    void run() { descend(0, EdgeMask(), 0); }

    bool exceeded() const { return exceeded_; }
    int best() const { return best_; }
    std::vector<Cycle> witness() const {
        std::vector<Cycle> out;
        for (int i : best_pick_) out.push_back(f_.cycles[i]);
        return out;
    }

  private:
    void descend(std::size_t start, EdgeMask used, int count) {
        if (count > best_) {
            best_ = count;
            best_pick_ = pick_;
        }
        if (exceeded_ || steps_-- <= 0) {
            exceeded_ = true;
            return;
        }
        int room = std::min(free_edges_, slot_sum_) / lmin_;
        if (count + room <= best_) return;
        for (std::size_t i = start; i < f_.masks.size(); ++i) {
            if ((used & f_.masks[i]).any()) continue;
            const Cycle& c = f_.cycles[i];
            apply(c, -1);
            pick_.push_back(static_cast<int>(i));
            descend(i + 1, used | f_.masks[i], count + 1);
            pick_.pop_back();
            apply(c, +1);
            if (exceeded_) return;
        }
    }

    void apply(const Cycle& c, int sign) {
        free_edges_ += sign * static_cast<int>(c.length());
        for (VertexId v : c.verts) {
            slot_sum_ -= free_deg_[v] / 2;
            free_deg_[v] += 2 * sign;
            slot_sum_ += free_deg_[v] / 2;
        }
    }

    const IndexedFamily& f_;
    long long steps_;
    bool exceeded_ = false;
    int best_ = 0;
    int free_edges_ = 0;
    int slot_sum_ = 0;
    int lmin_ = 1;
    std::vector<int> free_deg_;
    std::vector<int> pick_, best_pick_;
};

// Minimum hitting set over the long-cycle family.  Branches on the edges of
// the first uncovered cycle, forbidding earlier branch edges in later
// children so the solution space is partitioned exactly; pruned by a greedy
// disjoint-subfamily lower bound.
class HittingSearch {
  public:
    HittingSearch(const IndexedFamily& f, long long max_steps, int floor_lb)
        : f_(f), steps_(max_steps), floor_lb_(floor_lb) {}

    void run() {
        seed_greedy();
        descend(EdgeMask(), EdgeMask(), 0, {});
    }

    bool exceeded() const { return exceeded_; }
    int best() const { return best_; }
    std::vector<EdgeId> witness() const {
        std::vector<EdgeId> out;
        for (int i = 0; i < kMaskWidth; ++i)
            if (best_hit_.test(i)) out.push_back(f_.index_edge[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    // A quick feasible solution so pruning bites from the start: repeatedly
    // hit the first uncovered cycle through its most popular edge, then drop
    // picks that turned out redundant.
    void seed_greedy() {
        EdgeMask hit;
        std::vector<int> picks;
        for (;;) {
            int open = first_uncovered(hit);
            if (open < 0) break;
            int best_edge = -1;
            long long best_score = -1;
            for (EdgeId e : f_.cycles[open].edges) {
                int idx = f_.edge_index[e];
                long long score = 0;
                for (std::size_t j = 0; j < f_.masks.size(); ++j)
                    if (f_.masks[j].test(idx) && (f_.masks[j] & hit).none()) ++score;
                if (score > best_score) {
                    best_score = score;
                    best_edge = idx;
                }
            }
            hit.set(best_edge);
            picks.push_back(best_edge);
        }
        for (std::size_t i = picks.size(); i-- > 0;) {
            EdgeMask trial = hit;
            trial.reset(picks[i]);
            if (first_uncovered(trial) < 0) hit = trial;
        }
        best_ = static_cast<int>(hit.count());
        best_hit_ = hit;
    }

    int first_uncovered(const EdgeMask& hit) const {
        for (std::size_t i = 0; i < f_.masks.size(); ++i)
            if ((f_.masks[i] & hit).none()) return static_cast<int>(i);
        return -1;
    }

    int disjoint_lower_bound(const EdgeMask& hit) const {
        EdgeMask taken;
        int count = 0;
        for (std::size_t i = 0; i < f_.masks.size(); ++i) {
            if ((f_.masks[i] & hit).any()) continue;
            if ((f_.masks[i] & taken).any()) continue;
            taken |= f_.masks[i];
            ++count;
        }
        return count;
    }

    void descend(EdgeMask hit, EdgeMask forbidden, int size, EdgeMask chosen) {
        if (exceeded_ || steps_-- <= 0) {
            exceeded_ = true;
            return;
        }
        int open = first_uncovered(hit);
        if (open < 0) {
            if (size < best_) {
                best_ = size;
                best_hit_ = chosen;
            }
            return;
        }
        int lb = disjoint_lower_bound(hit);
        if (floor_lb_ - size > lb) lb = floor_lb_ - size;
        if (size + lb >= best_) return;
        EdgeMask forb = forbidden;
        for (EdgeId e : f_.cycles[open].edges) {
            int idx = f_.edge_index[e];
            if (forb.test(idx)) continue;
            EdgeMask next_hit = hit;
            next_hit.set(idx);
            EdgeMask next_chosen = chosen;
            next_chosen.set(idx);
            descend(next_hit, forb, size + 1, next_chosen);
            if (exceeded_) return;
            forb.set(idx);
        }
    }

    const IndexedFamily& f_;
    long long steps_;
    int floor_lb_;
    bool exceeded_ = false;
    int best_ = 0;
    EdgeMask best_hit_;
};

// tau = m - n + c once every cycle is long: hitting all long cycles then
// means deleting down to a spanning forest, and the non-forest edges do it.
std::vector<EdgeId> non_forest_edges(const Multigraph& g) {
    std::vector<char> seen(g.max_vertex_id_bound(), 0);
    std::vector<char> tree(g.max_edge_id_bound(), 0);
    std::vector<VertexId> queue;
    for (VertexId root : g.vertices()) {
        if (seen[root]) continue;
        seen[root] = 1;
        queue.assign(1, root);
        while (!queue.empty()) {
            VertexId u = queue.back();
            queue.pop_back();
            for (const IncidentEdge& ie : g.incident(u)) {
                if (ie.other == u || seen[ie.other]) continue;
                seen[ie.other] = 1;
                tree[ie.edge] = 1;
                queue.push_back(ie.other);
            }
        }
    }
    std::vector<EdgeId> out;
    for (EdgeId e : g.edges())
        if (!tree[e]) out.push_back(e);
    return out;
}

} // namespace

OracleBudget oracle_budget_from_env() {
    OracleBudget budget;
    if (const char* raw = std::getenv("EPKIT_BUDGET_EDGES")) {
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) budget.max_edges = static_cast<int>(v);
    }
    return budget;
}

LongCycleAnswer has_long_cycle_exact(const Multigraph& g, int l, const OracleBudget& budget) {
    require(l >= 1, "has_long_cycle_exact: l must be positive");
    LongCycleAnswer ans;
    if (static_cast<int>(g.num_edges()) > budget.max_edges) {
        ans.status = OracleStatus::unverifiable;
        ans.note = edge_count_note(g, budget);
        return ans;
    }
    CycleScan scan(g, l, longest_possible_cycle(g), budget.max_steps);
    scan.run([&](const Cycle& c) {
        ans.exists = true;
        ans.witness = c;
        return false;
    });
    if (!ans.exists && scan.exceeded()) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: search step budget exhausted";
    }
    return ans;
}

CycleFamilyAnswer enumerate_long_cycles(const Multigraph& g, int l, const OracleBudget& budget) {
    require(l >= 1, "enumerate_long_cycles: l must be positive");
    CycleFamilyAnswer ans;
    if (static_cast<int>(g.num_edges()) > budget.max_edges) {
        ans.status = OracleStatus::unverifiable;
        ans.note = edge_count_note(g, budget);
        return ans;
    }
    CycleScan scan(g, l, longest_possible_cycle(g), budget.max_steps);
    bool overflow = false;
    scan.run([&](const Cycle& c) {
        if (static_cast<long long>(ans.cycles.size()) >= budget.max_cycles) {
            overflow = true;
            return false;
        }
        ans.cycles.push_back(c);
        return true;
    });
    if (overflow) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: more than " + std::to_string(budget.max_cycles) +
                   " long cycles";
        ans.cycles.clear();
    } else if (scan.exceeded()) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: search step budget exhausted";
        ans.cycles.clear();
    } else {
        std::sort(ans.cycles.begin(), ans.cycles.end(), cycle_edge_order);
    }
    return ans;
}

PackingAnswer exact_max_packing(const Multigraph& g, int l, const OracleBudget& budget) {
    require(l >= 1, "exact_max_packing: l must be positive");
    PackingAnswer ans;
    if (static_cast<int>(g.num_edges()) > budget.max_edges ||
        static_cast<int>(g.num_edges()) > kMaskWidth) {
        ans.status = OracleStatus::unverifiable;
        ans.note = static_cast<int>(g.num_edges()) > budget.max_edges
                       ? edge_count_note(g, budget)
                       : "unverifiable at this scale: more than 256 edges";
        return ans;
    }
    CycleFamilyAnswer family = enumerate_long_cycles(g, l, budget);
    if (family.status != OracleStatus::ok) {
        ans.status = family.status;
        ans.note = family.note;
        return ans;
    }
    if (family.cycles.empty()) return ans;
    IndexedFamily f = index_family(g, std::move(family.cycles));
    PackingSearch search(g, f, budget.max_steps);
    search.run();
    if (search.exceeded()) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: branch-and-bound step budget exhausted";
        return ans;
    }
    ans.value = search.best();
    ans.witness = search.witness();
    ensure(cycles_edge_disjoint(ans.witness), "exact_max_packing: witness shares edges");
    return ans;
}

HittingAnswer exact_min_hitting(const Multigraph& g, int l, const OracleBudget& budget) {
    require(l >= 1, "exact_min_hitting: l must be positive");
    HittingAnswer ans;
    if (static_cast<int>(g.num_edges()) > budget.max_edges ||
        static_cast<int>(g.num_edges()) > kMaskWidth) {
        ans.status = OracleStatus::unverifiable;
        ans.note = static_cast<int>(g.num_edges()) > budget.max_edges
                       ? edge_count_note(g, budget)
                       : "unverifiable at this scale: more than 256 edges";
        return ans;
    }

    // When g has no cycle shorter than l, a hitting set must leave a forest
    // and conversely, so the answer is the feedback edge count.
    CycleScan short_scan(g, 1, l - 1, budget.max_steps);
    bool has_short = false;
    short_scan.run([&](const Cycle&) {
        has_short = true;
        return false;
    });
    if (!has_short && short_scan.exceeded()) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: search step budget exhausted";
        return ans;
    }
    if (!has_short) {
        ans.witness = non_forest_edges(g);
        ans.value = static_cast<int>(ans.witness.size());
        return ans;
    }

    CycleFamilyAnswer family = enumerate_long_cycles(g, l, budget);
    if (family.status != OracleStatus::ok) {
        ans.status = family.status;
        ans.note = family.note;
        return ans;
    }
    if (family.cycles.empty()) return ans;
    IndexedFamily f = index_family(g, std::move(family.cycles));

    // On simple graphs a subgraph without cycles of length >= l keeps at most
    // (l-1)(n_i - 1)/2 edges per component (Erdos-Gallai), so at least
    // m - sum of caps edges must go.  Seeds the search with a tight floor.
    int floor_lb = 0;
    if (g.is_simple() && l >= 3) {
        long long cap = 0;
        for (const auto& comp : connected_components(g))
            cap += static_cast<long long>(l - 1) * (static_cast<long long>(comp.size()) - 1) / 2;
        long long gap = static_cast<long long>(g.num_edges()) - cap;
        if (gap > 0) floor_lb = static_cast<int>(gap);
    }

    HittingSearch search(f, budget.max_steps, floor_lb);
    search.run();
    if (search.exceeded()) {
        ans.status = OracleStatus::unverifiable;
        ans.note = "unverifiable at this scale: branch-and-bound step budget exhausted";
        return ans;
    }
    ans.value = search.best();
    ans.witness = search.witness();
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        bool covered = false;
        for (EdgeId e : f.cycles[i].edges)
            covered = covered || std::binary_search(ans.witness.begin(), ans.witness.end(), e);
        ensure(covered, "exact_min_hitting: witness misses a long cycle");
    }
    return ans;
}

VerifyReport verify_certificate(const Multigraph& g, int k, int l, const Certificate& cert,
                                const OracleBudget& budget) {
    require(k >= 0, "verify_certificate: k must be nonnegative");
    require(l >= 2, "verify_certificate: l must be at least 2");
    VerifyReport report;
    auto fail = [&](std::string why) {
        report.status = VerifyStatus::violation;
        report.detail = std::move(why);
        return report;
    };
    if (cert.k != k || cert.l != l)
        return fail("certificate parameters do not match the instance");
    long long bound = static_cast<long long>(k) * g_long(k, l);
    if (cert.bound != bound)
        return fail("declared bound " + std::to_string(cert.bound) + " should be " +
                    std::to_string(bound));
    if (cert.is_packing) {
        if (static_cast<int>(cert.cycles.size()) != k)
            return fail("packing has " + std::to_string(cert.cycles.size()) + " cycles, needs " +
                        std::to_string(k));
        std::vector<EdgeId> all;
        for (const Cycle& c : cert.cycles) {
            std::string why;
            if (!validate_cycle(g, c, &why)) return fail("invalid cycle: " + why);
            if (static_cast<int>(c.length()) < l)
                return fail("cycle of length " + std::to_string(c.length()) + " is below " +
                            std::to_string(l));
            all.insert(all.end(), c.edges.begin(), c.edges.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            return fail("not edge-disjoint");
        return report;
    }
    std::vector<EdgeId> f = cert.hitting;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
        return fail("hitting set repeats an edge");
    for (EdgeId e : f)
        if (!g.has_edge(e)) return fail("hitting set uses a missing edge id");
    if (static_cast<long long>(f.size()) > bound) return fail("bound exceeded");
    Multigraph h = g;
    for (EdgeId e : f) h.remove_edge(e);
    LongCycleAnswer rest = has_long_cycle_exact(h, l, budget);
    if (rest.status == OracleStatus::unverifiable) {
        report.status = VerifyStatus::unverifiable;
        report.detail = rest.note;
        return report;
    }
    if (rest.exists) return fail("residual graph keeps a cycle of length >= " + std::to_string(l));
    return report;
}

VerifyReport verify_classic_certificate(const Multigraph& g, int k, ClassicMode mode,
                                        const ClassicCertificate& cert) {
    require(k >= 0, "verify_classic_certificate: k must be nonnegative");
    VerifyReport report;
    auto fail = [&](std::string why) {
        report.status = VerifyStatus::violation;
        report.detail = std::move(why);
        return report;
    };
    if (cert.k != k || cert.mode != mode)
        return fail("certificate parameters do not match the instance");
    long long bound = static_cast<long long>(k) * g_classic(k);
    if (cert.bound != bound)
        return fail("declared bound " + std::to_string(cert.bound) + " should be " +
                    std::to_string(bound));
    if (cert.is_packing) {
        if (static_cast<int>(cert.cycles.size()) != k)
            return fail("packing has " + std::to_string(cert.cycles.size()) + " cycles, needs " +
                        std::to_string(k));
        for (const Cycle& c : cert.cycles) {
            std::string why;
            if (!validate_cycle(g, c, &why)) return fail("invalid cycle: " + why);
        }
        bool disjoint = mode == ClassicMode::vertex ? cycles_vertex_disjoint(cert.cycles)
                                                    : cycles_edge_disjoint(cert.cycles);
        if (!disjoint)
            return fail(mode == ClassicMode::vertex ? "not vertex-disjoint" : "not edge-disjoint");
        return report;
    }
    Multigraph h = g;
    if (mode == ClassicMode::vertex) {
        std::vector<VertexId> hit = cert.hit_vertices;
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end())
            return fail("hitting set repeats a vertex");
        for (VertexId v : hit)
            if (!g.has_vertex(v)) return fail("hitting set uses a missing vertex id");
        if (static_cast<long long>(hit.size()) > bound) return fail("bound exceeded");
        for (VertexId v : hit) h.remove_vertex(v);
    } else {
        std::vector<EdgeId> hit = cert.hit_edges;
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end())
            return fail("hitting set repeats an edge");
        for (EdgeId e : hit)
            if (!g.has_edge(e)) return fail("hitting set uses a missing edge id");
        if (static_cast<long long>(hit.size()) > bound) return fail("bound exceeded");
        for (EdgeId e : hit) h.remove_edge(e);
    }
    if (!is_acyclic(h)) return fail("residual graph keeps a cycle");
    return report;
}

LemmaReport check_diameter_lemma(const Multigraph& g, int l, int gbound,
                                 const OracleBudget& budget) {
    require(l >= 1, "check_diameter_lemma: l must be positive");
    require(gbound >= 2 * l - 1, "check_diameter_lemma: need gbound >= 2l-1");
    LemmaReport report;
    if (is_acyclic(g)) {
        report.detail = "acyclic, so no cycle reaches length " + std::to_string(l);
        return report;
    }
    for (const std::vector<VertexId>& comp : connected_components(g)) {
        Multigraph sub = g.induced_subgraph(comp);
        int d = diameter(sub);
        if (2 * d >= gbound) {
            report.status = LemmaStatus::premises_not_satisfied;
            report.detail = "component diameter " + std::to_string(d) + " is not below " +
                            std::to_string(gbound) + "/2";
            return report;
        }
    }
    CycleScan window(g, l, std::min(gbound, longest_possible_cycle(g)), budget.max_steps);
    std::optional<Cycle> in_window;
    window.run([&](const Cycle& c) {
        in_window = c;
        return false;
    });
    if (in_window) {
        report.status = LemmaStatus::premises_not_satisfied;
        report.detail = "a cycle of length " + std::to_string(in_window->length()) +
                        " lies in [" + std::to_string(l) + ", " + std::to_string(gbound) + "]";
        return report;
    }
    if (window.exceeded()) {
        report.status = LemmaStatus::unverifiable;
        report.detail = "unverifiable at this scale: search step budget exhausted";
        return report;
    }
    LongCycleAnswer any = has_long_cycle_exact(g, l, budget);
    if (any.status == OracleStatus::unverifiable) {
        report.status = LemmaStatus::unverifiable;
        report.detail = any.note;
        return report;
    }
    if (any.exists) {
        report.status = LemmaStatus::counterexample;
        report.detail = "found a cycle of length " + std::to_string(any.witness->length()) +
                        " that the diameter bound rules out";
        report.witness = any.witness;
        return report;
    }
    return report;
}

} // namespace epkit
