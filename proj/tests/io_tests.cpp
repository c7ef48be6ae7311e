#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "epkit/classic.hpp"
#include "epkit/errors.hpp"
#include "epkit/generators.hpp"
#include "epkit/io.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/oracle.hpp"
#include "epkit/solver.hpp"

using namespace epkit;

namespace {

Multigraph petersen() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

std::string serialize(const Multigraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Multigraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

bool same_graph(const Multigraph& a, const Multigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e)
        if (a.endpoints(e) != b.endpoints(e)) return false;
    return true;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("graph files round-trip") {
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1); // parallel
    g.add_edge(1, 2);
    g.add_edge(2, 2); // loop
    g.add_edge(3, 0);

    std::string text = serialize(g);
    CHECK(text == "multigraph 4 5\n0 1\n0 1\n1 2\n2 2\n3 0\n");
    Multigraph back = parse(text);
    CHECK(same_graph(g, back));
    CHECK(serialize(back) == text);

    CHECK(serialize(parse("multigraph 0 0\n")) == "multigraph 0 0\n");
    CHECK(same_graph(petersen(), parse(serialize(petersen()))));
}

TEST_CASE("edge ids follow line order") {
    Multigraph g = parse("multigraph 3 4\n2 1\n0 0\n1 2\n0 2\n");
    CHECK(g.endpoints(0) == std::pair<VertexId, VertexId>{2, 1});
    CHECK(g.endpoints(1) == std::pair<VertexId, VertexId>{0, 0});
    CHECK(g.endpoints(2) == std::pair<VertexId, VertexId>{1, 2});
    CHECK(g.endpoints(3) == std::pair<VertexId, VertexId>{0, 2});
}

TEST_CASE("graph parsing accepts loose whitespace only") {
    Multigraph g = parse("multigraph   2  1\n\n  0\t1\n\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);

    CHECK_THROWS_AS(parse("graph 2 1\n0 1\n"), precondition_error);
    CHECK_THROWS_AS(parse(""), precondition_error);
    CHECK_THROWS_AS(parse("multigraph 2\n"), precondition_error);
    CHECK_THROWS_AS(parse("multigraph -2 1\n0 1\n"), precondition_error);
    CHECK_THROWS_AS(parse("multigraph 2 2\n0 1\n"), precondition_error);
    CHECK_THROWS_AS(parse("multigraph 2 1\n0 2\n"), precondition_error);
    CHECK_THROWS_AS(parse("multigraph 2 1\n0 x\n"), precondition_error);
    CHECK_THROWS_AS(parse("multigraph 2 1\n0 1\n1 0\n"), precondition_error);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), precondition_error);
}

TEST_CASE("writers demand contiguous ids") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.remove_edge(0);
    std::ostringstream out;
    CHECK_THROWS_AS(write_graph(out, g), precondition_error);
}

TEST_CASE("long certificates round-trip byte for byte") {
    struct Instance {
        Multigraph g;
        int k, l;
    };
    std::vector<Instance> instances;
    instances.push_back({petersen(), 2, 5});
    instances.push_back({gen_grid(3, 3), 2, 4});
    instances.push_back({gen_path(6), 3, 3});
    instances.push_back({gen_theta(2, 2, 2), 1, 4});

    for (const Instance& inst : instances) {
        Certificate c = solve_long(inst.g, inst.k, inst.l);
        std::string text = certificate_to_json(c);
        Certificate back = certificate_from_json(inst.g, text);
        CHECK(certificate_to_json(back) == text);
        CHECK(back.is_packing == c.is_packing);
        CHECK(back.k == c.k);
        CHECK(back.l == c.l);
        CHECK(back.bound == c.bound);
        CHECK(back.hitting == c.hitting);
        CHECK(back.provenance == c.provenance);
        REQUIRE(back.cycles.size() == c.cycles.size());
        for (std::size_t i = 0; i < c.cycles.size(); ++i) {
            CHECK(back.cycles[i].edges == c.cycles[i].edges);
            CHECK(back.cycles[i].verts == c.cycles[i].verts);
        }
        CHECK(verify_certificate(inst.g, inst.k, inst.l, back).status == VerifyStatus::ok);
    }
}

TEST_CASE("certificate parsing validates structure and ids") {
    Multigraph g = gen_cycle(4);
    CHECK_THROWS_AS(certificate_from_json(g, "not json"), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, "[1, 2]"), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, "{}"), precondition_error);

    std::string good = R"({"kind": "packing", "k": 1, "l": 3, "bound": 16,
                           "cycles": [[0, 1, 2, 3]], "hitting": [], "provenance": []})";
    Certificate c = certificate_from_json(g, good);
    CHECK(c.is_packing);
    CHECK(c.cycles.size() == 1);
    CHECK(c.cycles[0].verts == std::vector<VertexId>{0, 1, 2, 3});

    auto broken = [&](const std::string& find, const std::string& replace) {
        std::string text = good;
        text.replace(text.find(find), find.size(), replace);
        return text;
    };
    CHECK_THROWS_AS(certificate_from_json(g, broken("\"packing\"", "\"maybe\"")), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, broken("\"k\": 1", "\"k\": \"one\"")), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, broken("[0, 1, 2, 3]", "[0, 1, 2, 9]")), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, broken("[0, 1, 2, 3]", "[0, 1]")), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, broken("[0, 1, 2, 3]", "[0, 2]")), precondition_error);
    CHECK_THROWS_AS(certificate_from_json(g, broken("\"hitting\": []", "\"hitting\": [9]")), precondition_error);

    // A parsed two-edge cycle starts at its smaller endpoint.
    Multigraph digon = gen_cycle(2);
    Certificate d = certificate_from_json(digon, R"({"kind": "packing", "k": 1, "l": 2,
        "bound": 8, "cycles": [[0, 1]], "hitting": [], "provenance": []})");
    CHECK(d.cycles[0].verts == std::vector<VertexId>{0, 1});
}

TEST_CASE("classic certificates round-trip byte for byte") {
    for (ClassicMode mode : {ClassicMode::vertex, ClassicMode::edge}) {
        for (int k : {1, 2, 3}) {
            ClassicCertificate c = solve_classic(petersen(), k, mode);
            std::string text = classic_certificate_to_json(c);
            ClassicCertificate back = classic_certificate_from_json(petersen(), text);
            CHECK(classic_certificate_to_json(back) == text);
            CHECK(back.mode == c.mode);
            CHECK(back.k == c.k);
            CHECK(back.bound == c.bound);
            CHECK(back.is_packing == c.is_packing);
            CHECK(back.trivial_bound == c.trivial_bound);
            CHECK(back.hit_vertices == c.hit_vertices);
            CHECK(back.hit_edges == c.hit_edges);
            CHECK(verify_classic_certificate(petersen(), k, mode, back).status == VerifyStatus::ok);
        }
    }

    Multigraph g = gen_cycle(4);
    std::string good = R"({"kind": "hitting", "mode": "edge", "k": 1, "bound": 10,
        "trivial_bound": false, "cycles": [], "hit_vertices": [], "hit_edges": [2]})";
    ClassicCertificate c = classic_certificate_from_json(g, good);
    CHECK(c.hit_edges == std::vector<EdgeId>{2});
    CHECK_THROWS_AS(classic_certificate_from_json(g, R"({"kind": "hitting", "mode": "diagonal",
        "k": 1, "bound": 10, "trivial_bound": false, "cycles": [], "hit_vertices": [],
        "hit_edges": []})"),
        precondition_error);
    CHECK_THROWS_AS(classic_certificate_from_json(g, R"({"kind": "hitting", "mode": "vertex",
        "k": 1, "bound": 10, "trivial_bound": false, "cycles": [], "hit_vertices": [7],
        "hit_edges": []})"),
        precondition_error);
}

} // TEST_SUITE
