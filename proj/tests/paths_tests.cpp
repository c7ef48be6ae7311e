#include <doctest.h>

#include <functional>
#include <set>

#include "epkit/errors.hpp"
#include "epkit/paths.hpp"

using namespace epkit;

namespace {

Multigraph complete(int n) {
    Multigraph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

void check_witnesses(const Multigraph& g, VertexId u, VertexId v,
                     const std::pair<int, std::vector<Path>>& r) {
    CHECK(r.first == static_cast<int>(r.second.size()));
    std::set<EdgeId> used;
    for (const Path& p : r.second) {
        CHECK(p.front() == u);
        CHECK(p.back() == v);
        CHECK(validate_path(g, p));
        for (EdgeId e : p.edges) CHECK(used.insert(e).second);
    }
}

// Brute-force maximum over families of pairwise edge-disjoint u-v paths;
// independent of the flow code, usable for graphs with few edges.
int brute_max_paths(const Multigraph& g, VertexId u, VertexId v) {
    std::vector<std::vector<EdgeId>> all;
    std::vector<EdgeId> cur_edges;
    std::set<EdgeId> used;
    std::function<void(VertexId)> walk = [&](VertexId at) {
        if (at == v) {
            all.push_back(cur_edges);
            return;
        }
        for (const IncidentEdge& ie : g.incident(at)) {
            if (ie.other == at || used.count(ie.edge)) continue;
            used.insert(ie.edge);
            cur_edges.push_back(ie.edge);
            walk(ie.other);
            cur_edges.pop_back();
            used.erase(ie.edge);
        }
    };
    walk(u);
    int best = 0;
    std::function<void(std::size_t, std::set<EdgeId>&, int)> pick =
        [&](std::size_t i, std::set<EdgeId>& taken, int cnt) {
            best = std::max(best, cnt);
            for (std::size_t j = i; j < all.size(); ++j) {
                bool clash = false;
                for (EdgeId e : all[j])
                    if (taken.count(e)) { clash = true; break; }
                if (clash) continue;
                for (EdgeId e : all[j]) taken.insert(e);
                pick(j + 1, taken, cnt + 1);
                for (EdgeId e : all[j]) taken.erase(e);
            }
        };
    std::set<EdgeId> taken;
    pick(0, taken, 0);
    return best;
}

} // namespace

TEST_SUITE("paths") {

TEST_CASE("three parallel edges give three paths") {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    auto r = max_edge_disjoint_paths(g, 0, 1);
    CHECK(r.first == 3);
    check_witnesses(g, 0, 1, r);
}

TEST_CASE("path endpoints give one path") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto r = max_edge_disjoint_paths(g, 0, 2);
    CHECK(r.first == 1);
    check_witnesses(g, 0, 2, r);
}

TEST_CASE("K4 carries three disjoint paths between any pair") {
    Multigraph g = complete(4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) {
            auto r = max_edge_disjoint_paths(g, u, v);
            CHECK(r.first == 3);
            check_witnesses(g, u, v, r);
        }
}

TEST_CASE("disconnected endpoints give zero") {
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto r = max_edge_disjoint_paths(g, 0, 3);
    CHECK(r.first == 0);
    CHECK(r.second.empty());
}

TEST_CASE("loops do not contribute") {
    Multigraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    auto r = max_edge_disjoint_paths(g, 0, 1);
    CHECK(r.first == 1);
    check_witnesses(g, 0, 1, r);
}

TEST_CASE("flow value matches brute force on small graphs") {
    // Butterfly with a doubled wing edge and a chord.
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    g.add_edge(3, 4);
    auto gs = {std::pair<VertexId, VertexId>{0, 2}, {1, 2}, {0, 4}, {1, 4}};
    for (auto [u, v] : gs) {
        auto r = max_edge_disjoint_paths(g, u, v);
        CHECK(r.first == brute_max_paths(g, u, v));
        check_witnesses(g, u, v, r);
    }
    Multigraph k4 = complete(4);
    CHECK(brute_max_paths(k4, 0, 3) == 3);
}

TEST_CASE("identical endpoints are rejected") {
    Multigraph g(2);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(max_edge_disjoint_paths(g, 0, 0), precondition_error);
}

}
