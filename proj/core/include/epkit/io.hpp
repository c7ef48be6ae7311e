#pragma once

#include <iosfwd>
#include <string>

#include "epkit/classic.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/solver.hpp"

namespace epkit {

// Graph text format: a header line `multigraph <n> <m>` followed by m lines
// `<u> <v>` with 0-based endpoints.  Repeated pairs are parallel edges and
// `u u` is a loop.  Edge ids follow line order, so certificates written for
// the file can be audited against it directly.  Malformed input throws
// precondition_error naming the problem.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);

// Writers require contiguous vertex and edge ids (fresh graphs have them).
void write_graph(std::ostream& out, const Multigraph& g);
void write_graph_file(const std::string& path, const Multigraph& g);

// Certificates serialize to JSON with a fixed key order: kind, k, l, bound,
// cycles as edge-id lists, hitting as an edge-id list, provenance.  Parsing
// needs the graph to rebuild and validate the cycles; the edge order inside
// each cycle is kept exactly as written, so serialize(parse(s)) == s.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Multigraph& g, const std::string& text);

// Classic certificates carry mode, hit vertices and hit edges instead of l.
std::string classic_certificate_to_json(const ClassicCertificate& c);
ClassicCertificate classic_certificate_from_json(const Multigraph& g, const std::string& text);

} // namespace epkit
