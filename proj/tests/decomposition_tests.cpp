#include <doctest.h>

#include <algorithm>

#include "epkit/contraction.hpp"
#include "epkit/decomposition.hpp"
#include "epkit/errors.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/search.hpp"

using namespace epkit;

namespace {

Multigraph ring(int n) {
    Multigraph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return g;
}

Multigraph complete(int n) {
    Multigraph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
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

// Center 0 with three pendant paths of the given length.
Multigraph star_legs(int legs, int len) {
    Multigraph g(1);
    for (int a = 0; a < legs; ++a) {
        VertexId prev = 0;
        for (int i = 0; i < len; ++i) {
            VertexId v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

} // namespace

TEST_SUITE("decomposition") {

TEST_CASE("separated set on a ring") {
    CHECK(separated_set(ring(12), 3) == std::vector<VertexId>{0, 3, 6, 9});
}

TEST_CASE("separated set collapses a clique to one vertex") {
    CHECK(separated_set(complete(4), 2) == std::vector<VertexId>{0});
}

TEST_CASE("separation one keeps every vertex") {
    CHECK(separated_set(complete(3), 1) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("each component contributes to the separated set") {
    Multigraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    CHECK(separated_set(g, 2) == std::vector<VertexId>{0, 3});
}

TEST_CASE("separated set rejects nonpositive separation") {
    CHECK_THROWS_AS(separated_set(ring(3), 0), precondition_error);
}

TEST_CASE("ball partition extends layer by layer") {
    Multigraph g = ring(12);
    BallDecomposition d = ball_partition(g, {0, 6}, 2);
    CHECK(d.centers == std::vector<VertexId>{0, 6});
    CHECK(d.part(0) == std::vector<VertexId>{0, 1, 2, 3, 9, 10, 11});
    CHECK(d.part(6) == std::vector<VertexId>{4, 5, 6, 7, 8});
    CHECK(d.dist_to_center.at(3) == 3);
    CHECK(d.dist_to_center.at(8) == 2);
    CHECK(d.part_of.at(11) == 0);
}

TEST_CASE("boundary tie at distance exactly r goes to the smaller center") {
    Multigraph g = ring(8);
    BallDecomposition d = ball_partition(g, {0, 4}, 2);
    CHECK(d.part_of.at(2) == 0);
    CHECK(d.part_of.at(6) == 0);
    CHECK(d.part(4) == std::vector<VertexId>{3, 4, 5});
    CHECK(d.dist_to_center.at(6) == 2);
}

TEST_CASE("ball partition rejects crowded centers") {
    CHECK_THROWS_AS(ball_partition(ring(8), {0, 3}, 2), precondition_error);
}

TEST_CASE("ball partition rejects repeated centers and uncovered vertices") {
    CHECK_THROWS_AS(ball_partition(ring(6), {0, 0}, 1), precondition_error);
    Multigraph g = ring(3);
    VertexId lone = g.add_vertex();
    (void)lone;
    CHECK_THROWS_AS(ball_partition(g, {0}, 1), precondition_error);
}

TEST_CASE("radius zero with every vertex a center gives singletons") {
    Multigraph g = complete(4);
    BallDecomposition d = ball_partition(g, {0, 1, 2, 3}, 0);
    for (VertexId v : g.vertices()) {
        CHECK(d.part(v) == std::vector<VertexId>{v});
        CHECK(d.dist_to_center.at(v) == 0);
    }
}

TEST_CASE("ball packing minor with m zero is the identity") {
    Multigraph g = petersen();
    auto [h, map] = ko_minor(g, 0);
    CHECK(h.num_vertices() == 10);
    CHECK(h.num_edges() == 15);
    CHECK(h.min_degree() == 3);
    CHECK_NOTHROW(check_contraction_map(g, h, map));
    CHECK(map.preimage(7) == std::vector<VertexId>{7});
}

TEST_CASE("ball packing minor of a long ring is a shorter ring") {
    Multigraph g = ring(12);
    auto [h, map] = ko_minor(g, 1);
    CHECK(h.num_vertices() == 4);
    CHECK(h.num_edges() == 4);
    CHECK(h.min_degree() == 2);
    CHECK_NOTHROW(check_contraction_map(g, h, map));

    auto gc = girth(h);
    REQUIRE(gc.has_value());
    CHECK(gc->first == 4);
    Cycle lifted = lift_cycle(g, map, gc->second);
    CHECK(lifted.length() == 12);
}

TEST_CASE("ball packing minor handles the empty graph and rejects negative m") {
    Multigraph g;
    auto [h, map] = ko_minor(g, 2);
    CHECK(h.num_vertices() == 0);
    CHECK(map.vertex_preimages.empty());
    CHECK_THROWS_AS(ko_minor(ring(3), -1), precondition_error);
}

TEST_CASE("pre-leaves of a three-legged star") {
    Multigraph g = star_legs(3, 4);
    BallDecomposition d = ball_partition(g, {0}, 4);
    PreLeafReport rep = pre_leaf_analysis(g, d, 0, 2);

    REQUIRE(rep.block_info.blocks.size() == 12);
    CHECK(rep.root_block == 0);
    CHECK(rep.hstar_blocks == std::vector<int>{0, 1, 2, 4, 5, 6, 8, 9, 10});
    CHECK(rep.pre_leaves == std::vector<int>{2, 6, 10});
    CHECK(rep.ancestors.at(3) == std::vector<int>{0, 1, 2});
    CHECK(rep.ancestors.at(0).empty());
    CHECK(rep.tree_adj.at(0) == std::vector<int>{1});
    CHECK(rep.tree_adj.at(2) == std::vector<int>{1});

    std::map<int, int> want{{3, 2}, {7, 6}, {11, 10}};
    CHECK(rep.leaf_block_pre_leaf == want);
}

TEST_CASE("a lone block is its own pre-leaf") {
    Multigraph g(2);
    g.add_edge(0, 1);
    BallDecomposition d = ball_partition(g, {0}, 3);
    PreLeafReport rep = pre_leaf_analysis(g, d, 0, 2);
    CHECK(rep.hstar_blocks == std::vector<int>{0});
    CHECK(rep.pre_leaves == std::vector<int>{0});
    std::map<int, int> want{{0, 0}};
    CHECK(rep.leaf_block_pre_leaf == want);
}

TEST_CASE("pre-leaves of two triangles with a tail") {
    Multigraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    g.add_edge(2, 5);
    g.add_edge(5, 6);
    BallDecomposition d = ball_partition(g, {0}, 4);
    PreLeafReport rep = pre_leaf_analysis(g, d, 0, 4);

    REQUIRE(rep.block_info.blocks.size() == 4);
    CHECK(rep.hstar_blocks == std::vector<int>{0, 1});
    CHECK(rep.pre_leaves == std::vector<int>{0, 1});
    CHECK(rep.ancestors.at(3) == std::vector<int>{0, 2});
    std::map<int, int> want{{1, 1}, {3, 0}};
    CHECK(rep.leaf_block_pre_leaf == want);
}

TEST_CASE("negative core radius leaves no pre-leaves") {
    Multigraph g = ring(12);
    BallDecomposition d = ball_partition(g, {0, 6}, 2);
    PreLeafReport rep = pre_leaf_analysis(g, d, 0, 3);
    CHECK(rep.hstar_blocks.empty());
    CHECK(rep.pre_leaves.empty());
    CHECK(rep.leaf_block_pre_leaf.empty());
    CHECK(rep.ancestors.at(0).empty());
}

TEST_CASE("pre-leaf analysis rejects parts holding a long cycle") {
    Multigraph g = ring(5);
    BallDecomposition d = ball_partition(g, {0}, 2);
    CHECK_THROWS_AS(pre_leaf_analysis(g, d, 0, 4), invariant_violation);
}

TEST_CASE("pre-leaf analysis rejects a vertex that is not a center") {
    Multigraph g = ring(5);
    BallDecomposition d = ball_partition(g, {0}, 2);
    CHECK_THROWS_AS(pre_leaf_analysis(g, d, 1, 4), precondition_error);
}

} // TEST_SUITE
