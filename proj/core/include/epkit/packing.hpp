#pragma once

#include <optional>
#include <vector>

#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"

namespace epkit {

/**
 * Greedy packing core: k rounds of "take the canonical shortest cycle of
 * length >= lmin, delete its vertex set".  Carries no degree precondition and
 * runs no proof-side assertions; absent when some round finds no qualifying
 * cycle.  The checked extractors below and the solver's l=2 terminal path
 * (where no degree lemma applies) are built on top of it.
 */
std::optional<std::vector<Cycle>> try_cycle_packing(const Multigraph& g, int k, int lmin);

/**
 * k vertex-disjoint cycles from a simple graph of min degree >= 3k, by
 * repeatedly deleting the vertices of a shortest cycle.  Each round asserts
 * the degree argument behind the guarantee: outside vertices keep all but at
 * most three neighbours, so the residual min degree stays >= 3(k-1).
 * Parallel edges defeat that argument (two vertices joined by 3k parallel
 * edges meet the degree bound but carry one cycle vertex-disjointly), hence
 * the simplicity requirement.
 */
std::vector<Cycle> greedy_cycle_packing(const Multigraph& g, int k);

/**
 * k vertex-disjoint cycles of length >= l (l >= 3) from a simple graph of min
 * degree >= kl-1, via shortest-long-cycle deletion.  Asserts per round that
 * every outside vertex has at most l neighbours on the removed cycle and that
 * the residual min degree is >= (k-1)l-1.
 */
std::vector<Cycle> greedy_long_cycle_packing(const Multigraph& g, int k, int l);

/**
 * One cycle of length >= l (l >= 3): grows a maximal path out of the
 * smallest-id vertex and closes it through the front vertex's farthest
 * neighbour on the path.  Min degree >= l-1 guarantees success; when the
 * closure comes out shorter that degree bound cannot have held, and a
 * precondition error reports it.
 */
Cycle maximal_path_long_cycle(const Multigraph& g, int l);

/**
 * Given three edge-disjoint paths that pairwise share exactly their two
 * endpoints, returns the even cycle formed by two paths of equal length
 * parity (two such paths exist by pigeonhole; the first such pair in input
 * order is taken).
 */
Cycle even_cycle_from_theta(const Multigraph& g, const std::vector<Path>& paths);

} // namespace epkit
