#include <doctest.h>

#include "epkit/errors.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/search.hpp"

using namespace epkit;

namespace {

Multigraph ring(int n) {
    Multigraph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return g;
}

Multigraph complete(int n) {
    Multigraph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

Multigraph petersen() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("bfs distances on a path") {
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto d = bfs_distances(g, 0);
    CHECK(d.at(0) == 0);
    CHECK(d.at(3) == 3);
    auto dm = bfs_distances_multi(g, {0, 3});
    CHECK(dm.at(1) == 1);
    CHECK(dm.at(2) == 1);
}

TEST_CASE("bfs shortest path is deterministic") {
    Multigraph g(4);
    g.add_edge(0, 1); // 0
    g.add_edge(1, 3); // 1
    g.add_edge(0, 2); // 2
    g.add_edge(2, 3); // 3
    auto p = bfs_shortest_path(g, 0, 3);
    REQUIRE(p.has_value());
    CHECK(p->length() == 2);
    CHECK(p->verts == std::vector<VertexId>{0, 1, 3});

    Multigraph h(2);
    CHECK_FALSE(bfs_shortest_path(h, 0, 1).has_value());
}

TEST_CASE("components, connectivity and diameter") {
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 1});
    CHECK_FALSE(is_connected(g));
    CHECK(diameter(ring(8)) == 4);
    CHECK_THROWS_AS(diameter(g), precondition_error);
}

TEST_CASE("acyclicity treats loops and parallels as cycles") {
    Multigraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(is_acyclic(path));

    Multigraph loop(1);
    loop.add_edge(0, 0);
    CHECK_FALSE(is_acyclic(loop));

    Multigraph dig(2);
    dig.add_edge(0, 1);
    dig.add_edge(0, 1);
    CHECK_FALSE(is_acyclic(dig));

    CHECK_FALSE(is_acyclic(ring(3)));
    CHECK(is_acyclic(Multigraph(4)));
}

TEST_CASE("girth across the length conventions") {
    Multigraph g = ring(5);
    auto r = girth(g);
    REQUIRE(r.has_value());
    CHECK(r->first == 5);
    CHECK(validate_cycle(g, r->second));

    g.add_edge(0, 2); // chord: girth 3
    CHECK(girth(g)->first == 3);

    g.add_edge(1, 2); // parallel pair: girth 2
    CHECK(girth(g)->first == 2);

    g.add_edge(4, 4); // loop: girth 1
    CHECK(girth(g)->first == 1);

    CHECK_FALSE(girth(Multigraph(3)).has_value());
    CHECK(girth(complete(4))->first == 3);
    CHECK(girth(petersen())->first == 5);
}

TEST_CASE("shortest_cycle_geq respects the window") {
    Multigraph g = ring(6);
    CHECK_FALSE(shortest_cycle_geq(g, 7, 20).has_value());
    CHECK_FALSE(shortest_cycle_geq(g, 2, 5).has_value());
    auto c = shortest_cycle_geq(g, 4, 6);
    REQUIRE(c.has_value());
    CHECK(c->length() == 6);
}

TEST_CASE("shortest_cycle_geq picks the minimal qualifying length") {
    // Two triangles sharing vertex 0 plus an outer 5-cycle.
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    auto c3 = shortest_cycle_geq(g, 1, 10);
    REQUIRE(c3.has_value());
    CHECK(c3->length() == 3);
    // The lexicographically smallest canonical key wins among both triangles.
    CHECK(canonical_edge_key(*c3) == std::vector<EdgeId>{0, 1, 2});
    // Gluing the triangles at vertex 0 is not a cycle, so nothing longer exists.
    CHECK_FALSE(shortest_cycle_geq(g, 4, 10).has_value());
}

TEST_CASE("bounded_long_cycle on the petersen graph") {
    Multigraph g = petersen();
    auto c = bounded_long_cycle(g, 6, 9);
    REQUIRE(c.has_value());
    CHECK(c->length() == 6);
    CHECK(validate_cycle(g, *c));
    CHECK_FALSE(bounded_long_cycle(g, 10, 10).has_value()); // petersen is not hamiltonian
    auto c9 = bounded_long_cycle(g, 9, 9);
    REQUIRE(c9.has_value());
    CHECK(c9->length() == 9);
}

TEST_CASE("girth length agrees with the exact engine on small graphs") {
    // Cross-check the BFS estimate against exhaustive enumeration.
    std::vector<Multigraph> graphs;
    graphs.push_back(ring(4));
    graphs.push_back(complete(5));
    graphs.push_back(petersen());
    Multigraph theta(8); // two vertices joined by three paths of lengths 2,3,3
    theta.add_edge(0, 2); theta.add_edge(2, 1);
    theta.add_edge(0, 3); theta.add_edge(3, 4); theta.add_edge(4, 1);
    theta.add_edge(0, 5); theta.add_edge(5, 6); theta.add_edge(6, 1);
    graphs.push_back(theta);
    for (const Multigraph& g : graphs) {
        auto fast = girth_length(g);
        auto exact = shortest_cycle_geq(g, 1, static_cast<int>(g.num_vertices()));
        REQUIRE(fast.has_value());
        REQUIRE(exact.has_value());
        CHECK(*fast == exact->length());
    }
}

}
