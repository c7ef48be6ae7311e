#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epkit/classic.hpp"
#include "epkit/cycle.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/solver.hpp"

namespace epkit {

/**
 * Size guards for the brute-force oracles.  max_edges bounds the instances an
 * oracle will even look at, max_cycles bounds how many long cycles an
 * enumeration may collect, and max_steps bounds the search work (path
 * extensions and branch-and-bound nodes).  Exceeding any of them yields an
 * explicit "unverifiable" answer, never a silent pass.
 */
struct OracleBudget {
    int max_edges = 64;
    long long max_cycles = 250'000;
    long long max_steps = 50'000'000;
};

// Default budget with EPKIT_BUDGET_EDGES (when set to a positive integer)
// overriding max_edges.
OracleBudget oracle_budget_from_env();

enum class OracleStatus { ok, unverifiable };

struct LongCycleAnswer {
    OracleStatus status = OracleStatus::ok;
    bool exists = false;
    std::optional<Cycle> witness; // set when exists
    std::string note;             // reason when unverifiable
};

// Exhaustive: does g contain a cycle of length >= l?  Loops count as
// length-1 cycles and parallel pairs as length-2 cycles.
LongCycleAnswer has_long_cycle_exact(const Multigraph& g, int l,
                                     const OracleBudget& budget = oracle_budget_from_env());

struct CycleFamilyAnswer {
    OracleStatus status = OracleStatus::ok;
    std::vector<Cycle> cycles; // every cycle of length >= l, each exactly once
    std::string note;
};

// All cycles of length >= l, enumerated by an anchored path search that is
// independent of the library's canonical cycle search.
CycleFamilyAnswer enumerate_long_cycles(const Multigraph& g, int l,
                                        const OracleBudget& budget = oracle_budget_from_env());

struct PackingAnswer {
    OracleStatus status = OracleStatus::ok;
    int value = 0;               // nu: maximum number of edge-disjoint long cycles
    std::vector<Cycle> witness;  // a packing attaining it
    std::string note;
};

PackingAnswer exact_max_packing(const Multigraph& g, int l,
                                const OracleBudget& budget = oracle_budget_from_env());

struct HittingAnswer {
    OracleStatus status = OracleStatus::ok;
    int value = 0;               // tau: minimum edge set meeting all long cycles
    std::vector<EdgeId> witness; // a hitting set attaining it
    std::string note;
};

HittingAnswer exact_min_hitting(const Multigraph& g, int l,
                                const OracleBudget& budget = oracle_budget_from_env());

enum class VerifyStatus { ok, violation, unverifiable };

struct VerifyReport {
    VerifyStatus status = VerifyStatus::ok;
    std::string detail;
};

/**
 * Checks a certificate literally against (g, k, l): a packing must consist of
 * k valid pairwise edge-disjoint cycles of length >= l; a hitting set must
 * consist of distinct existing edges, fit under k*g_long(k, l), and leave no
 * long cycle (exhaustively checked, so the answer may be "unverifiable" on
 * instances beyond the budget).
 */
VerifyReport verify_certificate(const Multigraph& g, int k, int l, const Certificate& cert,
                                const OracleBudget& budget = oracle_budget_from_env());

// The classic-solver analogue: packings are vertex- or edge-disjoint per the
// declared mode and hitting sets must leave the graph acyclic.  Exact at any
// scale, no budget involved.
VerifyReport verify_classic_certificate(const Multigraph& g, int k, ClassicMode mode,
                                        const ClassicCertificate& cert);

enum class LemmaStatus { ok, premises_not_satisfied, counterexample, unverifiable };

struct LemmaReport {
    LemmaStatus status = LemmaStatus::ok;
    std::string detail;
    std::optional<Cycle> witness; // a long cycle that should not exist
};

/**
 * Checks the no-long-cycle consequence of the diameter bound: whenever every
 * component of g has diameter < gbound/2 and no cycle length falls in
 * [l, gbound], there is no cycle of length >= l at all.  A returned
 * counterexample signals a bug in one of the cycle searches.  Requires
 * gbound >= 2l-1.
 */
LemmaReport check_diameter_lemma(const Multigraph& g, int l, int gbound,
                                 const OracleBudget& budget = oracle_budget_from_env());

} // namespace epkit
