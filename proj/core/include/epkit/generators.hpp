#pragma once

#include <cstdint>
#include <vector>

#include "epkit/multigraph.hpp"

namespace epkit {

// Fixed-shape families.  gen_cycle(1) is a loop and gen_cycle(2) a parallel
// pair, matching the length conventions of Cycle.
Multigraph gen_cycle(int n);
Multigraph gen_path(int n);
Multigraph gen_complete(int n);
Multigraph gen_grid(int rows, int cols);

// Two hubs joined by three internally disjoint paths of a, b and c edges.
// gen_theta(1, 1, 1) is the triple edge.
Multigraph gen_theta(int a, int b, int c);

// Erdos-Renyi simple graph; identical output for identical (n, p, seed).
Multigraph gen_gnp(int n, double p, std::uint64_t seed);

// Relabels the parts side by side into one graph.
Multigraph disjoint_union(const std::vector<Multigraph>& parts);

// Random multigraph with 1..max_vertices vertices and 0..max_edges edges;
// endpoints drawn uniformly, so loops and parallel edges occur naturally.
Multigraph random_multigraph(int max_vertices, int max_edges, std::uint64_t seed);

// Random simple graph on n vertices grown edge by edge until every vertex
// has degree >= min_degree.  Requires n > min_degree.
Multigraph random_min_degree_graph(int n, int min_degree, std::uint64_t seed);

// Every connected simple graph on 1..max_n vertices, one per isomorphism
// class, built by canonical-code extension.  max_n <= 8.
std::vector<Multigraph> connected_graphs_up_to(int max_n);

// Connected cubic graph on 336 vertices with girth 12, built as a voltage
// lift of the triple edge over PSL(2,7).  Deterministic, and the girth is
// verified on the way out.
Multigraph high_girth_cubic();

} // namespace epkit
