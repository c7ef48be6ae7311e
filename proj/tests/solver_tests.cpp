#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epkit/contraction.hpp"
#include "epkit/errors.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/search.hpp"
#include "epkit/solver.hpp"

using namespace epkit;

namespace {

Multigraph ring(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph complete(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph petersen() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i + 5, 5 + (i + 2) % 5);
    return g;
}

Multigraph bowtie() {
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    return g;
}

Multigraph two_rings(int a, int b) {
    Multigraph g(a + b);
    for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
    for (int i = 0; i < b; ++i) g.add_edge(a + i, a + (i + 1) % b);
    return g;
}

// Two rings of the given sizes sharing exactly vertex 0.
Multigraph flower(int a, int b) {
    Multigraph g(a + b - 1);
    for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
    g.add_edge(0, a);
    for (int i = 0; i + 1 < b - 1; ++i) g.add_edge(a + i, a + i + 1);
    g.add_edge(a + b - 2, 0);
    return g;
}

// A ring on n vertices plus one extra vertex adjacent to 0 and 1, so the
// triangle is the only short cycle.
Multigraph ring_with_ear(int n) {
    Multigraph g(n + 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.add_edge(0, n);
    g.add_edge(1, n);
    return g;
}

Multigraph theta222() {
    Multigraph g(5);
    g.add_edge(0, 2);
    g.add_edge(2, 1);
    g.add_edge(0, 3);
    g.add_edge(3, 1);
    g.add_edge(0, 4);
    g.add_edge(4, 1);
    return g;
}

void check_long_certificate(const Multigraph& g, int k, int l, const Certificate& cert) {
    CHECK(cert.k == k);
    CHECK(cert.l == l);
    CHECK(cert.bound == static_cast<long long>(k) * g_long(k, l));
    if (cert.is_packing) {
        REQUIRE(cert.cycles.size() == static_cast<std::size_t>(k));
        std::vector<EdgeId> used;
        for (const Cycle& c : cert.cycles) {
            std::string why;
            CHECK_MESSAGE(validate_cycle(g, c, &why), why);
            CHECK(c.length() >= static_cast<std::size_t>(l));
            used.insert(used.end(), c.edges.begin(), c.edges.end());
        }
        std::sort(used.begin(), used.end());
        CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
    } else {
        CHECK(static_cast<long long>(cert.hitting.size()) <= cert.bound);
        Multigraph h = g;
        for (EdgeId e : cert.hitting) {
            REQUIRE(h.has_edge(e));
            h.remove_edge(e);
        }
        int lmax = std::max(static_cast<int>(h.num_vertices()), l);
        CHECK(!shortest_cycle_geq(h, l, lmax).has_value());
    }
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("threshold function values") {
    CHECK(g_long(0, 5) == 0);
    CHECK(g_long(1, 2) == 16);
    CHECK(g_long(1, 3) == 48);
    CHECK(g_long(1, 4) == 72);
    CHECK(g_long(2, 4) == 96);
    CHECK(g_long(2, 2) == 24);
    CHECK_THROWS_AS(g_long(1, 1), precondition_error);
    CHECK_THROWS_AS(g_long(-1, 3), precondition_error);
}

TEST_CASE("two disjoint five-cycles pack") {
    Multigraph g = two_rings(5, 5);
    Certificate cert = solve_long(g, 2, 5);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 2);
    CHECK(cert.cycles[0].length() == 5);
    CHECK(cert.cycles[1].length() == 5);
    REQUIRE(cert.provenance.size() == 3);
    CHECK(starts_with(cert.provenance[0], "R1:"));
    CHECK(starts_with(cert.provenance[1], "R1:"));
    CHECK(cert.provenance[2] == "base: k = 0");
    check_long_certificate(g, 2, 5, cert);
}

TEST_CASE("ten-cycle is hit by all of its edges") {
    Multigraph g = ring(10);
    Certificate cert = solve_long(g, 2, 4);
    REQUIRE(!cert.is_packing);
    CHECK(cert.bound == 192);
    REQUIRE(cert.hitting.size() == 10);
    for (EdgeId e = 0; e < 10; ++e) CHECK(cert.hitting[e] == e);
    CHECK(starts_with(cert.provenance.front(), "R1:"));
    CHECK(cert.provenance.back() == "base: no long cycle");
    check_long_certificate(g, 2, 4, cert);
}

TEST_CASE("forests yield the empty hitting set") {
    Multigraph g = path_graph(7);
    g.add_vertex();
    Certificate cert = solve_long(g, 3, 3);
    REQUIRE(!cert.is_packing);
    CHECK(cert.hitting.empty());
    check_long_certificate(g, 3, 3, cert);

    Certificate empty = solve_long(Multigraph(), 2, 4);
    CHECK(!empty.is_packing);
    CHECK(empty.hitting.empty());
    CHECK(empty.provenance == std::vector<std::string>{"base: no long cycle"});
}

TEST_CASE("k zero packs nothing") {
    Certificate cert = solve_long(ring(6), 0, 5);
    CHECK(cert.is_packing);
    CHECK(cert.cycles.empty());
    CHECK(cert.bound == 0);
    CHECK(cert.provenance == std::vector<std::string>{"base: k = 0"});
}

TEST_CASE("reduction priority and shapes") {
    auto pendant = find_reduction(path_graph(4), 1, 3);
    REQUIRE(pendant.has_value());
    CHECK(pendant->kind == ReductionKind::low_degree);
    CHECK(pendant->vertex == 0);

    auto leaf = find_reduction(bowtie(), 1, 4);
    REQUIRE(leaf.has_value());
    CHECK(leaf->kind == ReductionKind::leaf_block);
    CHECK(leaf->block_verts == std::vector<VertexId>{0, 1, 2});

    auto long_cycle = find_reduction(two_rings(5, 5), 2, 5);
    REQUIRE(long_cycle.has_value());
    CHECK(long_cycle->kind == ReductionKind::short_long_cycle);
    CHECK(long_cycle->cycle.length() == 5);

    CHECK(!find_reduction(Multigraph(), 1, 2).has_value());
    CHECK_THROWS_AS(find_reduction(ring(6), 0, 3), precondition_error);
    CHECK_THROWS_AS(find_reduction(ring(6), 1, 1), precondition_error);
}

TEST_CASE("two-block reduction is detected on a bare ring") {
    auto red = find_reduction(ring(17), 1, 2);
    REQUIRE(red.has_value());
    REQUIRE(red->kind == ReductionKind::two_blocks);
    CHECK(red->center == 0);
    CHECK(red->cut == 0);
    CHECK(red->t1 == 1);
    CHECK(red->t2 == 16);
    CHECK(red->p1 == 1);
    CHECK(red->p2 == 1);
    CHECK(red->t1_verts == std::vector<VertexId>{0, 1});
    CHECK(red->t2_verts == std::vector<VertexId>{0, 16});
}

TEST_CASE("bowtie collapses through leaf blocks") {
    Multigraph g = bowtie();
    Certificate cert = solve_long(g, 1, 4);
    REQUIRE(!cert.is_packing);
    CHECK(cert.hitting.empty());
    CHECK(starts_with(cert.provenance.front(), "R3:"));
    check_long_certificate(g, 1, 4, cert);
}

TEST_CASE("seventeen-cycle packs via block contraction") {
    Multigraph g = ring(17);
    Certificate cert = solve_long(g, 1, 2);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() == 17);
    REQUIRE(cert.provenance.size() == 3);
    CHECK(starts_with(cert.provenance[0], "R4:"));
    CHECK(starts_with(cert.provenance[1], "R1:"));
    check_long_certificate(g, 1, 2, cert);
}

TEST_CASE("forty-nine-cycle packs via block contraction") {
    Multigraph g = ring(49);
    Certificate cert = solve_long(g, 1, 3);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() == 49);
    CHECK(starts_with(cert.provenance[0], "R4:"));
    check_long_certificate(g, 1, 3, cert);
}

TEST_CASE("two-block reduction handles a triangle block") {
    Multigraph g = ring_with_ear(73);
    Certificate cert = solve_long(g, 1, 4);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() >= 73);
    CHECK(starts_with(cert.provenance[0], "R4:"));
    check_long_certificate(g, 1, 4, cert);
}

TEST_CASE("terminal contraction packs through the quotient") {
    Multigraph g = flower(17, 17);
    Certificate cert = solve_long(g, 1, 2);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() == 17);
    for (EdgeId e : cert.cycles[0].edges) CHECK(e < 17); // the first ring wins
    REQUIRE(cert.provenance.size() == 1);
    CHECK(starts_with(cert.provenance[0], "terminal:"));
    check_long_certificate(g, 1, 2, cert);
}

TEST_CASE("sigma lift maps contracted packings back") {
    Multigraph g(8);
    g.add_edge(0, 1); // 0: first block
    g.add_edge(1, 2); // 1
    g.add_edge(2, 0); // 2
    g.add_edge(0, 3); // 3: second block, a square
    g.add_edge(3, 4); // 4
    g.add_edge(4, 5); // 5
    g.add_edge(5, 0); // 6
    g.add_edge(2, 6); // 7
    g.add_edge(6, 4); // 8
    g.add_edge(2, 7); // 9
    g.add_edge(7, 4); // 10
    g.add_edge(6, 7); // 11
    g.add_edge(1, 6); // 12

    auto [h, map] = contract_vertex_set(g, {0, 3, 4, 5}, LoopPolicy::discard);
    VertexId vstar = kNoVertex;
    for (const auto& [w, pre] : map.vertex_preimages)
        if (pre.size() > 1) vstar = w;
    REQUIRE(vstar != kNoVertex);

    Reduction r;
    r.kind = ReductionKind::two_blocks;
    r.center = 0;
    r.cut = 0;
    r.t1 = 2;
    r.t2 = 4;
    r.t1_verts = {0, 1, 2};
    r.t1_edges = {0, 1, 2};
    r.t2_verts = {0, 3, 4, 5};
    r.t2_edges = {3, 4, 5, 6};
    r.p1 = 2;
    r.p2 = 2;

    SUBCASE("cycles avoiding the contraction pass through") {
        Cycle c;
        c.verts = {2, 6, 7};
        c.edges = {7, 11, 9};
        auto out = sigma_lift(g, r, map, {c});
        REQUIRE(out.size() == 1);
        CHECK(out[0].verts == c.verts);
        CHECK(out[0].edges == c.edges);
    }

    SUBCASE("a visit attached at one vertex lifts in place") {
        Cycle c;
        c.verts = {vstar, 6, 2, 7};
        c.edges = {8, 7, 9, 10};
        auto out = sigma_lift(g, r, map, {c});
        REQUIRE(out.size() == 1);
        std::string why;
        CHECK_MESSAGE(validate_cycle(g, out[0], &why), why);
        CHECK(out[0].length() == 4);
        std::set<EdgeId> es(out[0].edges.begin(), out[0].edges.end());
        CHECK(es == std::set<EdgeId>{7, 8, 9, 10});
    }

    SUBCASE("a cycle inside the first block keeps its length") {
        Cycle c;
        c.verts = {vstar, 1, 2};
        c.edges = {0, 1, 2};
        auto out = sigma_lift(g, r, map, {c});
        REQUIRE(out.size() == 1);
        std::string why;
        CHECK_MESSAGE(validate_cycle(g, out[0], &why), why);
        CHECK(out[0].length() == 3);
        std::set<EdgeId> es(out[0].edges.begin(), out[0].edges.end());
        CHECK(es == std::set<EdgeId>{0, 1, 2});
    }

    SUBCASE("crossing cycles close through distinct block paths") {
        Cycle c1;
        c1.verts = {vstar, 1, 2, 6};
        c1.edges = {0, 1, 7, 8};
        Cycle c2;
        c2.verts = {vstar, 2, 7};
        c2.edges = {2, 9, 10};
        auto out = sigma_lift(g, r, map, {c1, c2});
        REQUIRE(out.size() == 2);
        std::string why;
        CHECK_MESSAGE(validate_cycle(g, out[0], &why), why);
        CHECK_MESSAGE(validate_cycle(g, out[1], &why), why);
        CHECK(out[0].length() == 6);
        CHECK(out[1].length() == 5);
        CHECK(cycles_edge_disjoint(out));
    }

    SUBCASE("a first-block edge without the contracted vertex is rejected") {
        Cycle c;
        c.verts = {1, 2, 6};
        c.edges = {1, 7, 12};
        CHECK_THROWS_AS(sigma_lift(g, r, map, {c}), invariant_violation);
    }
}

TEST_CASE("ball packing lift expands parts into paths") {
    Multigraph g = ring(12);
    std::vector<std::vector<VertexId>> parts = {
        {0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    auto [q, map] = quotient_simple(g, parts);
    REQUIRE(q.num_vertices() == 3);
    REQUIRE(q.num_edges() == 3);

    Cycle c;
    c.verts = q.vertices();
    c.edges = {3, 7, 11};
    auto out = lift_ball_packing(g, map, {c});
    REQUIRE(out.size() == 1);
    CHECK(out[0].length() == 12);
    std::string why;
    CHECK_MESSAGE(validate_cycle(g, out[0], &why), why);

    CHECK_THROWS_AS(lift_ball_packing(g, map, {c, c}), precondition_error);
}

TEST_CASE("loop edges are ignored") {
    Multigraph g = ring(5);
    EdgeId loop = g.add_edge(0, 0);
    Certificate cert = solve_long(g, 1, 3);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() == 5);
    for (EdgeId e : cert.cycles[0].edges) CHECK(e != loop);
    check_long_certificate(g, 1, 3, cert);
}

TEST_CASE("parallel edges form two-cycles") {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    Certificate cert = solve_long(g, 1, 2);
    REQUIRE(cert.is_packing);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles[0].length() == 2);
    check_long_certificate(g, 1, 2, cert);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(solve_long(ring(5), -1, 3), precondition_error);
    CHECK_THROWS_AS(solve_long(ring(5), 1, 1), precondition_error);
    CHECK_THROWS_AS(solve_long(ring(5), 1, 3, -1), precondition_error);
}

TEST_CASE("certificates check out across fixtures") {
    std::vector<std::pair<std::string, Multigraph>> fixtures;
    fixtures.emplace_back("k4", complete(4));
    fixtures.emplace_back("k5", complete(5));
    fixtures.emplace_back("petersen", petersen());
    fixtures.emplace_back("ring10", ring(10));
    fixtures.emplace_back("bowtie", bowtie());
    fixtures.emplace_back("theta", theta222());
    fixtures.emplace_back("two_rings", two_rings(5, 7));
    fixtures.emplace_back("flower", flower(17, 17));

    for (const auto& [name, g] : fixtures) {
        for (int k = 1; k <= 2; ++k) {
            for (int l = 2; l <= 4; ++l) {
                CAPTURE(name);
                CAPTURE(k);
                CAPTURE(l);
                Certificate cert = solve_long(g, k, l);
                check_long_certificate(g, k, l, cert);
            }
        }
    }

    Certificate deep = solve_long(petersen(), 3, 5);
    check_long_certificate(petersen(), 3, 5, deep);
}

}
