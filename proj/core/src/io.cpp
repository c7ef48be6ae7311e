#include "epkit/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "epkit/errors.hpp"

namespace epkit {

namespace {

using ordered_json = nlohmann::ordered_json;

// Rebuilds a cycle from an edge-id list, keeping the list order so a parsed
// certificate serializes back byte for byte.  The walk direction is fixed by
// the shared endpoint of the first two edges (smallest endpoint first for a
// two-edge cycle, where both ends are shared).
Cycle cycle_in_given_order(const Multigraph& g, const std::vector<EdgeId>& edges) {
    require(!edges.empty(), "certificate cycle has no edges");
    for (EdgeId e : edges) require(g.has_edge(e), "certificate cycle uses a missing edge id");

    Cycle c;
    c.edges = edges;
    if (edges.size() == 1) {
        auto [u, v] = g.endpoints(edges[0]);
        require(u == v, "certificate cycle of one edge must be a loop");
        c.verts = {u};
    } else {
        auto [a, b] = g.endpoints(edges[0]);
        auto [x, y] = g.endpoints(edges[1]);
        VertexId first;
        if ((a == x && b == y) || (a == y && b == x))
            first = std::min(a, b);
        else if (a == x || a == y)
            first = b;
        else if (b == x || b == y)
            first = a;
        else
            throw precondition_error("certificate cycle edges do not form a closed walk");
        c.verts.push_back(first);
        VertexId cur = first;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            cur = g.other_end(edges[i], cur);
            c.verts.push_back(cur);
        }
    }
    std::string why;
    bool valid = validate_cycle(g, c, &why);
    require(valid, "certificate cycle is invalid: " + why);
    return c;
}

ordered_json cycles_to_json(const std::vector<Cycle>& cycles) {
    ordered_json out = ordered_json::array();
    for (const Cycle& c : cycles) out.push_back(c.edges);
    return out;
}

std::vector<Cycle> cycles_from_json(const Multigraph& g, const ordered_json& arr) {
    std::vector<Cycle> out;
    for (const auto& item : arr) out.push_back(cycle_in_given_order(g, item.get<std::vector<EdgeId>>()));
    return out;
}

ordered_json parse_json(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw precondition_error(std::string(what) + " is not valid JSON");
    require(j.is_object(), std::string(what) + " must be a JSON object");
    return j;
}

template <typename T>
T field(const ordered_json& j, const char* key, const char* what) {
    require(j.contains(key), std::string(what) + " is missing the '" + key + "' field");
    try {
        return j.at(key).get<T>();
    } catch (const ordered_json::exception&) {
        throw precondition_error(std::string(what) + " has a malformed '" + key + "' field");
    }
}

} // namespace

Multigraph read_graph(std::istream& in) {
    std::string word;
    require(static_cast<bool>(in >> word) && word == "multigraph",
            "graph file must start with a 'multigraph <n> <m>' header");
    long long n = -1, m = -1;
    require(static_cast<bool>(in >> n >> m) && n >= 0 && m >= 0,
            "graph header needs nonnegative vertex and edge counts");

    Multigraph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        require(static_cast<bool>(in >> u >> v),
                "graph file ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        require(u >= 0 && u < n && v >= 0 && v < n,
                "edge line " + std::to_string(i) + " references a vertex outside 0.." +
                    std::to_string(n - 1));
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    require(!(in >> word), "graph file has trailing content after " + std::to_string(m) + " edges");
    return g;
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    std::size_t n = g.num_vertices(), m = g.num_edges();
    for (std::size_t v = 0; v < n; ++v)
        require(g.has_vertex(static_cast<VertexId>(v)), "write_graph: vertex ids must be contiguous");
    for (std::size_t e = 0; e < m; ++e)
        require(g.has_edge(static_cast<EdgeId>(e)), "write_graph: edge ids must be contiguous");

    out << "multigraph " << n << ' ' << m << '\n';
    for (std::size_t e = 0; e < m; ++e) {
        auto [u, v] = g.endpoints(static_cast<EdgeId>(e));
        out << u << ' ' << v << '\n';
    }
}

void write_graph_file(const std::string& path, const Multigraph& g) {
    std::ofstream out(path);
    require(out.good(), "cannot open file for writing: " + path);
    write_graph(out, g);
    out.flush();
    require(out.good(), "write failed: " + path);
}

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["kind"] = c.is_packing ? "packing" : "hitting";
    j["k"] = c.k;
    j["l"] = c.l;
    j["bound"] = c.bound;
    j["cycles"] = cycles_to_json(c.cycles);
    j["hitting"] = c.hitting;
    j["provenance"] = c.provenance;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const Multigraph& g, const std::string& text) {
    ordered_json j = parse_json(text, "certificate");
    Certificate c;
    std::string kind = field<std::string>(j, "kind", "certificate");
    require(kind == "packing" || kind == "hitting",
            "certificate kind must be 'packing' or 'hitting'");
    c.is_packing = kind == "packing";
    c.k = field<int>(j, "k", "certificate");
    c.l = field<int>(j, "l", "certificate");
    c.bound = field<long long>(j, "bound", "certificate");
    require(j.contains("cycles") && j.at("cycles").is_array(),
            "certificate needs a 'cycles' array");
    c.cycles = cycles_from_json(g, j.at("cycles"));
    c.hitting = field<std::vector<EdgeId>>(j, "hitting", "certificate");
    for (EdgeId e : c.hitting)
        require(g.has_edge(e), "certificate hitting set uses a missing edge id");
    c.provenance = field<std::vector<std::string>>(j, "provenance", "certificate");
    return c;
}

std::string classic_certificate_to_json(const ClassicCertificate& c) {
    ordered_json j;
    j["kind"] = c.is_packing ? "packing" : "hitting";
    j["mode"] = c.mode == ClassicMode::vertex ? "vertex" : "edge";
    j["k"] = c.k;
    j["bound"] = c.bound;
    j["trivial_bound"] = c.trivial_bound;
    j["cycles"] = cycles_to_json(c.cycles);
    j["hit_vertices"] = c.hit_vertices;
    j["hit_edges"] = c.hit_edges;
    return j.dump(2) + "\n";
}

ClassicCertificate classic_certificate_from_json(const Multigraph& g, const std::string& text) {
    ordered_json j = parse_json(text, "classic certificate");
    ClassicCertificate c;
    std::string kind = field<std::string>(j, "kind", "classic certificate");
    require(kind == "packing" || kind == "hitting",
            "classic certificate kind must be 'packing' or 'hitting'");
    c.is_packing = kind == "packing";
    std::string mode = field<std::string>(j, "mode", "classic certificate");
    require(mode == "vertex" || mode == "edge",
            "classic certificate mode must be 'vertex' or 'edge'");
    c.mode = mode == "vertex" ? ClassicMode::vertex : ClassicMode::edge;
    c.k = field<int>(j, "k", "classic certificate");
    c.bound = field<long long>(j, "bound", "classic certificate");
    c.trivial_bound = field<bool>(j, "trivial_bound", "classic certificate");
    require(j.contains("cycles") && j.at("cycles").is_array(),
            "classic certificate needs a 'cycles' array");
    c.cycles = cycles_from_json(g, j.at("cycles"));
    c.hit_vertices = field<std::vector<VertexId>>(j, "hit_vertices", "classic certificate");
    for (VertexId v : c.hit_vertices)
        require(g.has_vertex(v), "classic certificate hits a missing vertex id");
    c.hit_edges = field<std::vector<EdgeId>>(j, "hit_edges", "classic certificate");
    for (EdgeId e : c.hit_edges)
        require(g.has_edge(e), "classic certificate hits a missing edge id");
    return c;
}

} // namespace epkit
