#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sbx/betti.hpp"
#include "sbx/graph_core.hpp"
#include "sbx/sbc.hpp"

namespace sbx {

// Graph on [1, n] whose maximal cliques are the label intervals [a_k, b_k].
// Intervals are sorted and strictly increasing in both endpoints (so none
// contains another), and consecutive intervals overlap in at least one
// vertex; together with a_1 = 1 and b_last = n this covers [1, n] and keeps
// the graph connected, which the initial-graph construction depends on.
struct ClosedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> cliques;

    // Validates everything above; throws std::invalid_argument.
    static ClosedGraph make(int n, std::vector<std::pair<int, int>> cliques);

    bool operator==(const ClosedGraph&) const = default;
};

// Expands the clique intervals into an edge list.
SimpleGraph closed_to_simple(const ClosedGraph& c);

// Result of checking whether a labeled graph is closed under its own
// labeling. `cliques` lists the maximal cliques as intervals (singletons
// allowed for isolated vertices) and is filled only when ok.
struct ClosedCheck {
    bool ok = false;
    std::vector<std::pair<int, int>> cliques;
};

// Checks the two-edge exchange condition on the given labeling and that
// every maximal clique is a label interval, then extracts those intervals.
ClosedCheck is_closed_labeling(const SimpleGraph& g);

struct InitialGraph {
    BipartiteGraph graph;
    SbcProfile profile;
};

// The bipartite graph on X = {x_1..x_{n-1}}, Y = {y_2..y_n} with an edge
// x_i y_j for every edge {i, j} (i < j) of the closed graph. The result is
// always strongly biconvex; a failed check is an internal error
// (std::logic_error).
InitialGraph initial_graph(const ClosedGraph& c);

// Identifies c1's last vertex with c2's first: c2's labels shift up by
// n1 - 1 and the clique lists concatenate.
ClosedGraph glue(const ClosedGraph& c1, const ClosedGraph& c2);

// What the initial graph's Betti support implies for the closed graph's
// binomial edge ideal. reg and projdim transfer exactly. Every position
// inside the table rectangle that is missing from the initial support but
// dominates some present position yields a vanishing certificate (Betti
// numbers can only drop when passing from the initial ideal back). The
// nonzero side transfers only at the boundary: some entry in column
// `projdim` and some entry in row `reg` must survive; everything else is
// not determined.
struct BinomialReport {
    int reg = 0;
    int projdim = 0;
    BettiSupport initial;
    std::set<std::pair<int, int>> vanishing_certificates;
    // "not_unique" when (projdim, projdim + reg) carries a certificate,
    // otherwise "not_determined".
    std::string unique_extremal_verdict;
};

BinomialReport binomial_invariants(const ClosedGraph& c);

}  // namespace sbx
